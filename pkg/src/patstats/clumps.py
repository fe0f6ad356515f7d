from dataclasses import dataclass, replace
from typing import Hashable

import torch
from jaxtyping import Float64
from torch import Tensor
from tqdm import tqdm

from ..core import Distribution, Paa, ValueDomain
from ..core.chain import check_ergodic
from ..core.operation import Operation, as_count
from ..core.recurrence import apply_operations, initial_table, push_states
from ..core.value_domain import Marker
from ..daa import PatternCfg, pattern_length
from ..daa.patterns import starts_with_wildcard
from ..misc.errors import ConvergenceError, ValidationError
from ..textmodel import TextModel
from .occurrences import counting_paa

CLUMP_START_TOLERANCE = 1e-12
CLUMP_START_MAX_STEPS = 10**5
CLUMP_EPSILON = 1e-9


class SinceMatch(Operation):
    """Steps since the last match, saturating at m - 1."""

    def __init__(self, length: int) -> None:
        self.length = length

    @property
    def tag(self) -> str:
        return f"since-match({self.length})"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        if as_count(emission) > 0:
            return 0
        return min(as_count(value) + 1, self.length - 1)


class ClumpGrowth(Operation):
    """(matches so far, steps since the last match) until the clump is over."""

    def __init__(self, length: int, bound: int) -> None:
        self.length = length
        self.bound = bound

    @property
    def tag(self) -> str:
        return f"clump({self.length},{self.bound})"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        h, x = value
        if x is Marker.ENDED or x == self.length - 1:
            return (h, Marker.ENDED)
        if as_count(emission) > 0:
            h = min(h + emission, self.bound)
            # The size is settled once the bound is hit.
            return (h, Marker.ENDED) if h == self.bound else (h, 0)
        return (h, x + 1)


@dataclass(frozen=True)
class ClumpResult:
    psi: Distribution
    residual: float
    steps: int


def match_counts(paa: Paa) -> Float64[Tensor, " state"]:
    return torch.tensor([emission[0][0] for emission in paa.emissions], dtype=torch.float64)


def checked_pattern(pattern: PatternCfg, model: TextModel) -> int:
    length = pattern_length(pattern, model.alphabet)
    if length < 2:
        raise ValidationError("clumps need patterns of length at least 2")
    if starts_with_wildcard(pattern, model.alphabet):
        raise ValidationError("patterns starting with a wildcard are not supported for clumps")
    return length


def since_match_paa(pattern: PatternCfg, model: TextModel, length: int) -> Paa:
    base = counting_paa(pattern, model, 1)
    return replace(
        base,
        value_domain=ValueDomain.integer_range(0, length - 1),
        start_value=length - 1,
        operations=(SinceMatch(length),) * base.num_states,
    )


def clump_starts(paa: Paa, length: int, steps: int | None = None):
    """Yield P(Q_t = q, clump starts at t) for t = 1, 2, ...

    A match at t starts a clump when the previous match is at least `length`
    steps back (or there is none).
    """
    is_match = match_counts(paa) > 0
    table = initial_table(paa)
    t = 0
    while steps is None or t < steps:
        pushed = push_states(paa, table)
        yield torch.where(is_match, pushed[:, length - 1], 0.0)
        table = apply_operations(paa, pushed)
        t += 1


def clump_start_vector(
    pattern: PatternCfg,
    model: TextModel,
    tol: float = CLUMP_START_TOLERANCE,
) -> tuple[Paa, Float64[Tensor, " state"]]:
    length = checked_pattern(pattern, model)
    paa = since_match_paa(pattern, model, length)
    check_ergodic(paa.chain)
    previous = None
    change = float("inf")
    for t, starts in enumerate(clump_starts(paa, length)):
        if t >= CLUMP_START_MAX_STEPS:
            break
        total = starts.sum().item()
        if total <= 0:
            continue
        gamma = starts / total
        if previous is not None:
            change = (gamma - previous).abs().max().item()
            if change < tol:
                return paa, gamma
        previous = gamma
    raise ConvergenceError("clump start distribution did not converge", residual=change)


def clump_start_distribution(
    pattern: PatternCfg,
    model: TextModel,
    tol: float = CLUMP_START_TOLERANCE,
) -> Distribution:
    """lim P(Q_t = q | a clump starts at t) over the pattern automaton states."""
    paa, gamma = clump_start_vector(pattern, model, tol)
    return Distribution.from_pairs(
        (paa.labels[q], gamma[q].item()) for q in gamma.nonzero().squeeze(-1).tolist()
    )


def expected_clump_count(pattern: PatternCfg, model: TextModel, n: int) -> float:
    """Expected number of clumps starting in a text of length n."""
    length = checked_pattern(pattern, model)
    paa = since_match_paa(pattern, model, length)
    return sum(starts.sum().item() for starts in clump_starts(paa, length, n))


def clump_size_distribution(
    pattern: PatternCfg,
    model: TextModel,
    bound: int,
    epsilon: float = CLUMP_EPSILON,
    quiet: bool = True,
) -> ClumpResult:
    """Distribution of the number of matches per clump, truncated at `bound`.

    The clump automaton enters the pattern automaton according to the clump
    start distribution and tracks (matches, steps since last match) until no
    further overlapping match is possible.
    """
    if bound < 1 or epsilon <= 0:
        raise ValidationError("clump sizes need bound >= 1 and epsilon > 0")
    base, gamma = clump_start_vector(pattern, model)
    length = checked_pattern(pattern, model)
    domain = ValueDomain.enumerated(
        [(h, x) for h in range(bound + 1) for x in range(length)]
        + [(h, Marker.ENDED) for h in range(bound + 1)]
    )
    paa = replace(
        base,
        value_domain=domain,
        start_value=(0, 0),
        operations=(ClumpGrowth(length, bound),) * base.num_states,
    ).with_start_row({q: gamma[q].item() for q in gamma.nonzero().squeeze(-1).tolist()})

    finishing = [domain.index((h, length - 1)) for h in range(bound + 1)]
    ended = [domain.index((h, Marker.ENDED)) for h in range(bound + 1)]
    table = initial_table(paa)
    cap = 10 * bound * length
    for step in tqdm(range(1, cap + 1), desc="clump", disable=quiet):
        table = apply_operations(paa, push_states(paa, table))
        # Mass at x = m - 1 ends its clump in the next step.
        psi = table[:, finishing].sum(dim=0) + table[:, ended].sum(dim=0)
        residual = 1.0 - psi.sum().item()
        if residual < epsilon:
            break
    else:
        raise ConvergenceError(
            f"clump iteration did not reach epsilon={epsilon} within {cap} steps",
            residual=residual,
        )
    distribution = Distribution.from_pairs(
        ((h, psi[h].item()) for h in range(1, bound + 1)), tail=max(residual, 0.0)
    )
    return ClumpResult(distribution, max(residual, 0.0), step)
