from typing import Literal

from ..core import Distribution, stationary_distribution, waiting_time_states
from ..daa import PatternCfg, Scheme
from ..misc.errors import ValidationError
from ..textmodel import TextModel
from .occurrences import counting_paa

WaitingMode = Literal["first", "subsequent"]


def pattern_waiting_time(
    pattern: PatternCfg,
    model: TextModel,
    tmax: int,
    mode: WaitingMode = "first",
    scheme: Scheme = "overlapping",
) -> Distribution:
    """Steps until the next match.

    "first" starts at the beginning of the text; "subsequent" measures the
    distance between consecutive matches in the long run, starting from the
    stationary distribution restricted to match states.
    """
    if tmax < 1:
        raise ValidationError("tmax must be at least 1")
    paa = counting_paa(pattern, model, 1, scheme)
    matches = [q for q, emission in enumerate(paa.emissions) if emission[0][0] > 0]
    if not matches:
        raise ValidationError("the pattern can never match under this text model")
    if mode == "first":
        return waiting_time_states(paa.chain, {paa.start_state: 1.0}, matches, tmax)
    if mode != "subsequent":
        raise ValidationError(f"unknown waiting mode {mode!r}")
    pi = stationary_distribution(paa.chain)
    restricted = {q: pi[q].item() for q in matches}
    total = sum(restricted.values())
    alpha = {q: p / total for q, p in restricted.items()}
    return waiting_time_states(paa.chain, alpha, matches, tmax, count_start=False)
