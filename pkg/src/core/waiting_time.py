from dataclasses import replace
from typing import Hashable, Iterable

import torch
from torch import Tensor

from ..misc.errors import ValidationError
from .chain import as_start_vector
from .distribution import Distribution
from .operation import WaitingOperation
from .paa import MarkovChain, Paa
from .recurrence import iterate_tables
from .value_domain import Marker


def waiting_paa(paa: Paa, targets: frozenset) -> Paa:
    """The value-rewritten automaton whose value is REACHED exactly when W = t."""
    base = paa.value_domain
    return replace(
        paa,
        value_domain=base.extended((Marker.REACHED, Marker.FLUSHED)),
        operations=tuple(WaitingOperation(op, targets, base) for op in paa.operations),
    )


def waiting_time_values(paa: Paa, targets: Iterable[Hashable], tmax: int) -> Distribution:
    """P(W = t) for t <= tmax where W is the first step whose value is in `targets`."""
    targets = frozenset(targets)
    if not targets:
        raise ValidationError("waiting time needs a nonempty target set")
    if tmax < 0:
        raise ValidationError("tmax must be nonnegative")
    for value in targets:
        if value not in paa.value_domain:
            raise ValidationError(f"target value {value!r} is not in the value domain")
    if paa.start_value in targets:
        return Distribution.dirac(0)
    modified = waiting_paa(paa, targets)
    reached = modified.value_domain.index(Marker.REACHED)
    pairs = [
        (t, table[:, reached].sum().item())
        for t, table in enumerate(iterate_tables(modified, tmax), start=1)
    ]
    return Distribution.from_pairs(pairs)


def waiting_time_states(
    chain: MarkovChain,
    alpha: dict[int, float] | Tensor,
    targets: Iterable[int],
    tmax: int,
    count_start: bool = True,
) -> Distribution:
    """P(W = t) for the first t with Q_t in `targets` when Q_0 ~ alpha.

    Mass entering the target set is collected as the aggregate state and then
    flushed. With `count_start=False` the start position does not count, which
    gives the return time min{t >= 1 | Q_t in targets}.
    """
    targets = sorted(set(targets))
    if not targets:
        raise ValidationError("waiting time needs a nonempty target set")
    if tmax < 0:
        raise ValidationError("tmax must be nonnegative")
    vector = as_start_vector(chain, alpha)
    mask = torch.zeros(chain.num_states, dtype=torch.bool)
    mask[targets] = True
    pairs = []
    if count_start:
        pairs.append((0, vector[mask].sum().item()))
        vector = vector.masked_fill(mask, 0.0)
    for t in range(1, tmax + 1):
        vector = chain.transitions.push_vector(vector)
        pairs.append((t, vector[mask].sum().item()))
        vector = vector.masked_fill(mask, 0.0)
    return Distribution.from_pairs(pairs)
