from dataclasses import dataclass, replace
from functools import cached_property
from typing import Hashable

import torch
from jaxtyping import Float64, Int64
from torch import Tensor

from ..misc.errors import ValidationError
from .operation import Operation
from .resource import guard_cells
from .transitions import Transitions
from .value_domain import ValueDomain

Emission = tuple[tuple[Hashable, float], ...]


@dataclass(frozen=True)
class ValueTransfer:
    """Per-state value index maps, one slot per emission (padded with weight 0)."""

    value_maps: Int64[Tensor, "state slot value"]
    weights: Float64[Tensor, "state slot"]


@dataclass(frozen=True, eq=False)
class MarkovChain:
    labels: tuple[Hashable, ...]
    transitions: Transitions

    @property
    def num_states(self) -> int:
        return len(self.labels)


@dataclass(frozen=True, eq=False)
class Paa:
    """A probabilistic arithmetic automaton.

    States are indexed 0..|Q|-1 and named by `labels`. In every step the state
    process moves according to `transitions`, the new state q draws an emission
    from `emissions[q]` and the value is updated by `operations[q]`.
    """

    labels: tuple[Hashable, ...]
    start_state: int
    transitions: Transitions
    value_domain: ValueDomain
    start_value: Hashable
    emissions: tuple[Emission, ...]
    operations: tuple[Operation, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if not (len(self.emissions) == len(self.operations) == n == self.transitions.num_states):
            raise ValidationError("states, emissions, operations and transitions disagree")
        if not 0 <= self.start_state < n:
            raise ValidationError("start state is not a state of the automaton")
        if len(set(self.labels)) != n:
            raise ValidationError("state labels must be unique")
        self.value_domain.index(self.start_value)
        for label, emission in zip(self.labels, self.emissions):
            if not emission:
                raise ValidationError(f"state {label!r} has an empty emission distribution")
            if any(p < 0 for _, p in emission) or abs(sum(p for _, p in emission) - 1) > 1e-9:
                raise ValidationError(f"emission distribution of {label!r} is not normalized")
        guard_cells(n * len(self.value_domain), "state-value table")
        # Compiling the value maps checks that every operation stays in the domain.
        self.transfer

    @property
    def num_states(self) -> int:
        return len(self.labels)

    @property
    def chain(self) -> MarkovChain:
        return MarkovChain(self.labels, self.transitions)

    @cached_property
    def label_index(self) -> dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def transfer(self) -> ValueTransfer:
        num_values = len(self.value_domain)
        slots = max(len(emission) for emission in self.emissions)
        identity = torch.arange(num_values, dtype=torch.int64)
        value_maps = identity.repeat(self.num_states, slots, 1)
        weights = torch.zeros((self.num_states, slots), dtype=torch.float64)
        cache: dict[tuple[str, Hashable], Tensor] = {}
        for q, (emission, operation) in enumerate(zip(self.emissions, self.operations)):
            for slot, (e, p) in enumerate(emission):
                key = (operation.tag, e)
                if key not in cache:
                    cache[key] = operation.index_map(self.value_domain, e)
                value_maps[q, slot] = cache[key]
                weights[q, slot] = p
        return ValueTransfer(value_maps, weights)

    def is_truncated_addition(self) -> bool:
        """Whether every state adds its (nonnegative integer) emission truncated at one bound."""
        if not all(op.is_truncated_addition for op in self.operations):
            return False
        bounds = {op.bound for op in self.operations}
        domain = self.value_domain
        return (
            len(bounds) == 1
            and domain.is_range
            and domain.range_size == len(domain)
            and domain.range_lo == 0
            and domain.range_hi == bounds.pop()
            and all(isinstance(e, int) and e >= 0 for em in self.emissions for e, _ in em)
        )

    def with_start_row(self, row: dict[int, float], label: Hashable = "start'") -> "Paa":
        """Add a fresh start state whose outgoing transitions are `row`."""
        return replace(
            self,
            labels=self.labels + (label,),
            start_state=self.num_states,
            transitions=self.transitions.with_new_state(row),
            emissions=self.emissions + (((0, 1.0),),),
            operations=self.operations + (self.operations[self.start_state],),
        )
