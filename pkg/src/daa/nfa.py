from dataclasses import dataclass
from typing import Iterable, Sequence

from ..misc.errors import ValidationError
from .counting import CountingDfa
from .reachability import reachable

# A generalized string: one character class per position.
GeneralizedString = tuple[str, ...]


@dataclass(frozen=True, eq=False)
class Nfa:
    """An NFA with character-class edges and per-state match multiplicities."""

    alphabet: tuple[str, ...]
    num_states: int
    starts: frozenset[int]
    # edges[q] lists (character class, target).
    edges: tuple[tuple[tuple[frozenset[str], int], ...], ...]
    finals: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != self.num_states or len(self.finals) != self.num_states:
            raise ValidationError("NFA tables do not match the state count")
        known = set(self.alphabet)
        for row in self.edges:
            for characters, target in row:
                if not characters <= known:
                    raise ValidationError("character class outside the alphabet")
                if not 0 <= target < self.num_states:
                    raise ValidationError("NFA edge points to an unknown state")


def as_generalized(pattern: Sequence[str], alphabet: Iterable[str]) -> GeneralizedString:
    known = set(alphabet)
    if not pattern:
        raise ValidationError("generalized strings must be nonempty")
    classes = []
    for position, characters in enumerate(pattern):
        if not characters:
            raise ValidationError(f"empty character class at position {position}")
        if not set(characters) <= known:
            raise ValidationError(f"class {characters!r} uses characters outside the alphabet")
        classes.append("".join(sorted(set(characters))))
    return tuple(classes)


def nfa_from_generalized(
    patterns: Iterable[Sequence[str]],
    alphabet: Iterable[str],
) -> Nfa:
    """One state chain per generalized string, sharing a start state that loops on every character."""
    alphabet = tuple(alphabet)
    everything = frozenset(alphabet)
    edges: list[list[tuple[frozenset[str], int]]] = [[(everything, 0)]]
    finals = [0]
    for pattern in patterns:
        previous = 0
        for characters in as_generalized(pattern, alphabet):
            edges.append([])
            finals.append(0)
            edges[previous].append((frozenset(characters), len(edges) - 1))
            previous = len(edges) - 1
        finals[previous] += 1
    if len(edges) == 1:
        raise ValidationError("need at least one generalized string")
    return Nfa(
        alphabet=alphabet,
        num_states=len(edges),
        starts=frozenset({0}),
        edges=tuple(tuple(row) for row in edges),
        finals=tuple(finals),
    )


def subset_construction(nfa: Nfa) -> CountingDfa:
    """The DFA over reachable state subsets; a subset counts its final NFA states."""
    moves: list[list[list[int]]] = [[[] for _ in nfa.alphabet] for _ in range(nfa.num_states)]
    for q, row in enumerate(nfa.edges):
        for characters, target in row:
            for a, character in enumerate(nfa.alphabet):
                if character in characters:
                    moves[q][a].append(target)

    def step(subset: frozenset[int], a: int) -> frozenset[int]:
        return frozenset(target for q in subset for target in moves[q][a])

    def successors(subset: frozenset[int]) -> list[frozenset[int]]:
        return [step(subset, a) for a in range(len(nfa.alphabet))]

    subsets = reachable([nfa.starts], successors)
    index = {subset: i for i, subset in enumerate(subsets)}
    return CountingDfa(
        labels=tuple(tuple(sorted(subset)) for subset in subsets),
        start=0,
        alphabet=nfa.alphabet,
        delta=tuple(
            tuple(index[step(subset, a)] for a in range(len(nfa.alphabet))) for subset in subsets
        ),
        counts=tuple(sum(nfa.finals[q] for q in subset) for subset in subsets),
    )
