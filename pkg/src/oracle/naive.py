from dataclasses import dataclass
from typing import Literal, Sequence

from ..misc.errors import ValidationError

Algorithm = Literal["horspool", "sunday"]


@dataclass(frozen=True)
class MatchResult:
    occurrences: int
    cost: int


def compare_window(pattern: str, text: str, position: int) -> tuple[bool, int]:
    """Right-to-left comparison of pattern against text[position:]; (match, accesses)."""
    accesses = 0
    for i in reversed(range(len(pattern))):
        accesses += 1
        if text[position + i] != pattern[i]:
            return False, accesses
    return True, accesses


def run_horspool(pattern: str, text: str) -> MatchResult:
    m = len(pattern)
    shift = {}
    for i, character in enumerate(pattern[:-1]):
        shift[character] = m - 1 - i
    occurrences = cost = position = 0
    while position <= len(text) - m:
        matched, accesses = compare_window(pattern, text, position)
        occurrences += matched
        cost += accesses
        position += shift.get(text[position + m - 1], m)
    return MatchResult(occurrences, cost)


def run_sunday(pattern: str, text: str) -> MatchResult:
    """Sunday's matcher; only windows followed by a text character are charged.

    The final window (without a following character) is still compared for
    the occurrence count.
    """
    m = len(pattern)
    shift = {}
    for i, character in enumerate(pattern):
        shift[character] = m - i
    occurrences = cost = position = 0
    while position <= len(text) - m:
        matched, accesses = compare_window(pattern, text, position)
        occurrences += matched
        if position + m == len(text):
            break
        cost += accesses + 1
        position += shift.get(text[position + m], m + 1)
    return MatchResult(occurrences, cost)


MATCHERS = {"horspool": run_horspool, "sunday": run_sunday}


def run_matcher(algorithm: Algorithm, pattern: str, text: str) -> MatchResult:
    if algorithm not in MATCHERS:
        raise ValidationError(f"unknown algorithm {algorithm!r}")
    if not pattern or len(text) < len(pattern):
        raise ValidationError("need a nonempty pattern no longer than the text")
    return MATCHERS[algorithm](pattern, text)


def occurrence_ends(patterns: Sequence[str | Sequence[str]], text: str) -> list[int]:
    """End positions of occurrences of any pattern; a pattern is a string or a
    sequence of allowed-character sets."""
    ends = set()
    for pattern in patterns:
        m = len(pattern)
        for end in range(m - 1, len(text)):
            start = end - m + 1
            if all(text[start + k] in pattern[k] for k in range(m)):
                ends.add(end)
    return sorted(ends)


def extract_clumps(patterns: Sequence[str | Sequence[str]], text: str) -> list[int]:
    """Sizes of the maximal runs of overlapping occurrences, left to right."""
    lengths = {len(pattern) for pattern in patterns}
    if len(lengths) != 1 or 0 in lengths:
        raise ValidationError("clumps need nonempty patterns of one common length")
    (m,) = lengths
    clumps: list[int] = []
    previous = None
    for end in occurrence_ends(patterns, text):
        if previous is not None and end - previous < m:
            clumps[-1] += 1
        else:
            clumps.append(1)
        previous = end
    return clumps


def simulate_flows(order: str, text: str, flows: int) -> int:
    """Number of template nucleotides incorporated during `flows` flows."""
    position = 0
    for flow in range(flows):
        nucleotide = order[flow % len(order)]
        while position < len(text) and text[position] == nucleotide:
            position += 1
    return position
