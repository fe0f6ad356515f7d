from dataclasses import dataclass
from functools import cached_property
from typing import Hashable

from ..core.operation import Operation
from ..core.value_domain import ValueDomain
from ..misc.errors import ValidationError


@dataclass(frozen=True, eq=False)
class Daa:
    """A deterministic arithmetic automaton.

    Reading character a in state q moves to q' = delta[q][a], after which the
    value becomes operations[q'](v, emissions[q']).
    """

    labels: tuple[Hashable, ...]
    start_state: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    value_domain: ValueDomain
    start_value: Hashable
    emissions: tuple[Hashable, ...]
    operations: tuple[Operation, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if not (len(self.delta) == len(self.emissions) == len(self.operations) == n):
            raise ValidationError("states, transitions, emissions and operations disagree")
        if not 0 <= self.start_state < n:
            raise ValidationError("start state is not a state of the automaton")
        for row in self.delta:
            if len(row) != len(self.alphabet) or any(not 0 <= q < n for q in row):
                raise ValidationError("transition function must be total")
        self.value_domain.index(self.start_value)

    @property
    def num_states(self) -> int:
        return len(self.labels)

    @cached_property
    def character_index(self) -> dict[str, int]:
        return {character: i for i, character in enumerate(self.alphabet)}

    def index_of(self, character: str) -> int:
        try:
            return self.character_index[character]
        except KeyError:
            raise ValidationError(f"character {character!r} is not in the alphabet")

    def run(self, text: str) -> tuple[int, Hashable]:
        """The state and value reached after reading `text`."""
        q, value = self.start_state, self.start_value
        for character in text:
            q = self.delta[q][self.index_of(character)]
            value = self.operations[q].apply(value, self.emissions[q])
        return q, value


def daa_value(daa: Daa, text: str) -> Hashable:
    return daa.run(text)[1]
