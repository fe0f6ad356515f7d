from dataclasses import dataclass
from typing import Hashable

from ..core import TruncatedAdd, ValueDomain
from ..core.operation import Operation
from ..daa import PROTEIN_ALPHABET, Daa
from ..misc.errors import ValidationError
from .masses import MassTable

START = "start"
FINISHED = "finished"
END = "end"


@dataclass(frozen=True)
class CleavageRule:
    """Cut after a cleavage character unless a prohibition character follows."""

    gamma: frozenset[str]
    pi: frozenset[str] = frozenset()
    alphabet: tuple[str, ...] = tuple(PROTEIN_ALPHABET)

    def __post_init__(self) -> None:
        outside = (self.gamma | self.pi) - set(self.alphabet)
        if outside:
            raise ValidationError(f"rule characters {sorted(outside)} are not in the alphabet")
        if not self.gamma:
            raise ValidationError("a cleavage rule needs at least one cleavage character")

    @classmethod
    def from_strings(cls, gamma: str, pi: str = "", alphabet: str = PROTEIN_ALPHABET):
        return cls(frozenset(gamma), frozenset(pi), tuple(alphabet))

    def cuts(self, previous: str, following: str) -> bool:
        return previous in self.gamma and following not in self.pi

    def digest(self, protein: str) -> list[str]:
        """The fragments of a fully cleaved protein."""
        fragments, start = [], 0
        for i in range(1, len(protein)):
            if self.cuts(protein[i - 1], protein[i]):
                fragments.append(protein[start:i])
                start = i
        if protein:
            fragments.append(protein[start:])
        return fragments


def trypsin(alphabet: str = PROTEIN_ALPHABET) -> CleavageRule:
    return CleavageRule.from_strings("KR", "P", alphabet)


def end_label(residue: str) -> tuple[str, str]:
    """The state entered when a fragment ends and the next one starts with `residue`."""
    return (END, residue)


def is_end(label: Hashable) -> bool:
    return isinstance(label, tuple) and len(label) == 2 and label[0] == END


def cleavage_labels(rule: CleavageRule, finished: bool) -> tuple[Hashable, ...]:
    labels = (START, *rule.alphabet, *(end_label(r) for r in rule.alphabet))
    return labels + (FINISHED,) if finished else labels


def cleavage_delta(rule: CleavageRule, labels: tuple[Hashable, ...]) -> tuple[tuple[int, ...], ...]:
    index = {label: i for i, label in enumerate(labels)}
    finished = FINISHED in index

    def successor(label: Hashable, character: str) -> int:
        if label == FINISHED or (finished and is_end(label)):
            return index[FINISHED]
        residue = label[1] if is_end(label) else label
        if residue != START and rule.cuts(residue, character):
            return index[end_label(character)]
        return index[character]

    return tuple(tuple(successor(label, a) for a in rule.alphabet) for label in labels)


def cleavage_daa(
    rule: CleavageRule,
    masses: MassTable,
    max_mass: int,
    split: bool = False,
) -> Daa:
    """Sums residue masses of the first fragment.

    Entering ("end", a) means the first fragment is over and the next one
    starts with a. Without `split` every end state moves on to the absorbing
    FINISHED state; with `split` the end states behave like the residue they
    name, so the automaton keeps cutting the rest of the protein, and they
    emit that residue's mass.
    """
    missing = set(rule.alphabet) - set(masses.alphabet)
    if missing:
        raise ValidationError(f"no masses for residues {sorted(missing)}")
    labels = cleavage_labels(rule, finished=not split)

    def emission(label: Hashable) -> int:
        if label in (START, FINISHED):
            return 0
        if is_end(label):
            return masses.nominal(label[1]) if split else 0
        return masses.nominal(label)

    return Daa(
        labels=labels,
        start_state=0,
        alphabet=rule.alphabet,
        delta=cleavage_delta(rule, labels),
        value_domain=ValueDomain.integer_range(0, max_mass),
        start_value=0,
        emissions=tuple(emission(label) for label in labels),
        operations=(TruncatedAdd(max_mass),) * len(labels),
    )


def with_operations(daa: Daa, domain: ValueDomain, operations: dict[bool, Operation]) -> Daa:
    """Replace the value domain and the operations of residue (False) and end (True) states."""
    return Daa(
        labels=daa.labels,
        start_state=daa.start_state,
        alphabet=daa.alphabet,
        delta=daa.delta,
        value_domain=domain,
        start_value=daa.start_value,
        emissions=daa.emissions,
        operations=tuple(operations[is_end(label)] for label in daa.labels),
    )
