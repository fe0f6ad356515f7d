from dataclasses import dataclass, replace
from typing import Callable

from ..misc.errors import ValidationError


@dataclass(frozen=True)
class AlgorithmSpec:
    """A window-based matcher: it reads windows of `window` characters, pays
    `cost(w)` character accesses for window w and moves on by `shift(w)`."""

    name: str
    pattern: str
    window: int
    cost: Callable[[str], int]
    shift: Callable[[str], int]
    max_cost: int
    max_shift: int


def compare_right_to_left(pattern: str, window: str) -> int:
    """Character comparisons until the first mismatch, scanning from the right."""
    m = len(pattern)
    for i in range(1, m + 1):
        if pattern[m - i] != window[m - i]:
            return i
    return m


def check_pattern(pattern: str) -> int:
    if not pattern:
        raise ValidationError("pattern must be nonempty")
    return len(pattern)


def horspool_spec(pattern: str) -> AlgorithmSpec:
    m = check_pattern(pattern)
    # Rightmost occurrence in pattern[0..m-2].
    right = {character: i for i, character in enumerate(pattern[:-1])}

    def shift(window: str) -> int:
        return (m - 1) - right.get(window[m - 1], -1)

    return AlgorithmSpec(
        name="horspool",
        pattern=pattern,
        window=m,
        cost=lambda window: compare_right_to_left(pattern, window),
        shift=shift,
        max_cost=m,
        max_shift=m,
    )


def sunday_spec(pattern: str) -> AlgorithmSpec:
    """Compare the first m window characters, then look at the character
    following them to choose the shift; that look-up is one more access."""
    m = check_pattern(pattern)
    last = {character: i for i, character in enumerate(pattern)}

    def shift(window: str) -> int:
        return m - last.get(window[m], -1)

    return AlgorithmSpec(
        name="sunday",
        pattern=pattern,
        window=m + 1,
        cost=lambda window: compare_right_to_left(pattern, window[:m]) + 1,
        shift=shift,
        max_cost=m + 1,
        max_shift=m + 1,
    )


def window_count_spec(spec: AlgorithmSpec) -> AlgorithmSpec:
    """Same windows and shifts, one unit of cost per window."""
    return replace(spec, name=f"{spec.name}-windows", cost=lambda window: 1, max_cost=1)


ALGORITHMS: dict[str, Callable[[str], AlgorithmSpec]] = {
    "horspool": horspool_spec,
    "sunday": sunday_spec,
}


def get_algorithm(name: str, pattern: str) -> AlgorithmSpec:
    if name not in ALGORITHMS:
        raise ValidationError(f"unknown algorithm {name!r}")
    return ALGORITHMS[name](pattern)
