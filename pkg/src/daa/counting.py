from dataclasses import dataclass
from typing import Hashable, Literal

from ..core.operation import TruncatedAdd
from ..core.value_domain import ValueDomain
from ..misc.errors import ValidationError
from .daa import Daa
from .reachability import reachable

Scheme = Literal["match_position", "overlapping", "nonoverlapping"]
SCHEMES = ("match_position", "overlapping", "nonoverlapping")


@dataclass(frozen=True, eq=False)
class CountingDfa:
    """A DFA whose states carry match counts.

    `multiplicity` is set while the counts are numbers of matching patterns;
    once they are clamped to match indicators it is cleared.
    """

    labels: tuple[Hashable, ...]
    start: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    counts: tuple[int, ...]
    multiplicity: bool = True

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.delta) != n or len(self.counts) != n:
            raise ValidationError("states, transitions and counts disagree")
        if not 0 <= self.start < n:
            raise ValidationError("start state is not a state of the DFA")
        for row in self.delta:
            if len(row) != len(self.alphabet) or any(not 0 <= q < n for q in row):
                raise ValidationError("transition function must be total")
        if any(count < 0 for count in self.counts):
            raise ValidationError("match counts must be nonnegative")

    @property
    def num_states(self) -> int:
        return len(self.labels)

    def index_of(self, character: str) -> int:
        try:
            return self.alphabet.index(character)
        except ValueError:
            raise ValidationError(f"character {character!r} is not in the alphabet")

    def cumulative_count(self, text: str) -> int:
        q, total = self.start, 0
        for character in text:
            q = self.delta[q][self.index_of(character)]
            total += self.counts[q]
        return total


def match_states(cdfa: CountingDfa) -> list[int]:
    return [q for q, count in enumerate(cdfa.counts) if count > 0]


def prune(cdfa: CountingDfa) -> CountingDfa:
    """Drop states that cannot be reached from the start."""
    order = reachable([cdfa.start], lambda q: cdfa.delta[q])
    if len(order) == cdfa.num_states:
        return cdfa
    index = {q: i for i, q in enumerate(order)}
    return CountingDfa(
        labels=tuple(cdfa.labels[q] for q in order),
        start=0,
        alphabet=cdfa.alphabet,
        delta=tuple(tuple(index[r] for r in cdfa.delta[q]) for q in order),
        counts=tuple(cdfa.counts[q] for q in order),
        multiplicity=cdfa.multiplicity,
    )


def apply_scheme(cdfa: CountingDfa, scheme: Scheme) -> CountingDfa:
    if scheme == "overlapping":
        if not cdfa.multiplicity:
            raise ValidationError(
                "overlapping counts need multiplicity emissions, this automaton only marks matches"
            )
        return cdfa
    if scheme not in SCHEMES:
        raise ValidationError(f"unknown counting scheme {scheme!r}")
    counts = tuple(min(count, 1) for count in cdfa.counts)
    delta = cdfa.delta
    if scheme == "nonoverlapping":
        # After a match, continue as if reading from the start state.
        restart = cdfa.delta[cdfa.start]
        delta = tuple(restart if count else row for row, count in zip(cdfa.delta, counts))
    return prune(
        CountingDfa(cdfa.labels, cdfa.start, cdfa.alphabet, delta, counts, multiplicity=False)
    )


def counting_daa(cdfa: CountingDfa, bound: int) -> Daa:
    """Accumulate match counts truncated at `bound`."""
    if bound < 1:
        raise ValidationError("truncation bound must be at least 1")
    return Daa(
        labels=cdfa.labels,
        start_state=cdfa.start,
        alphabet=cdfa.alphabet,
        delta=cdfa.delta,
        value_domain=ValueDomain.integer_range(0, bound),
        start_value=0,
        emissions=cdfa.counts,
        operations=(TruncatedAdd(bound),) * cdfa.num_states,
    )
