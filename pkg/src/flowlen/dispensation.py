from dataclasses import dataclass
from typing import Iterator

from ..misc.errors import ValidationError

NUCLEOTIDES = "ACGT"


@dataclass(frozen=True)
class Dispensation:
    """A cyclically repeated nucleotide flow order and the number of flows."""

    order: str
    flows: int
    alphabet: str = NUCLEOTIDES

    def __post_init__(self) -> None:
        if set(self.order) != set(self.alphabet):
            raise ValidationError(
                f"dispensation order {self.order!r} must use every nucleotide of {self.alphabet}"
            )
        length = len(self.order)
        if any(self.order[i] == self.order[(i + 1) % length] for i in range(length)):
            raise ValidationError(
                f"dispensation order {self.order!r} flows a nucleotide twice in a row"
            )
        if self.flows < 1:
            raise ValidationError("at least one flow is needed")

    @property
    def length(self) -> int:
        return len(self.order)

    def forward(self, index: int, nucleotide: str) -> int:
        """Flows from dispensation index `index` until `nucleotide` is dispensed (0 if it is now)."""
        for distance in range(self.length):
            if self.order[(index + distance) % self.length] == nucleotide:
                return distance
        raise ValidationError(f"{nucleotide!r} is never dispensed")


def valid_orders(min_length: int, max_length: int, alphabet: str = NUCLEOTIDES) -> Iterator[str]:
    """All reasonable dispensation orders with lengths in [min_length, max_length]."""

    def extend(prefix: str, length: int) -> Iterator[str]:
        if len(prefix) == length:
            if set(prefix) == set(alphabet) and prefix[0] != prefix[-1]:
                yield prefix
            return
        for nucleotide in alphabet:
            if not prefix or prefix[-1] != nucleotide:
                yield from extend(prefix + nucleotide, length)

    for length in range(max(min_length, len(alphabet)), max_length + 1):
        yield from extend("", length)
