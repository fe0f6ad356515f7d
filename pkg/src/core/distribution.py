from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from ..misc.errors import ValidationError
from .value_domain import value_sort_key

NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Distribution:
    """A finite distribution with an explicit residual.

    `tail` is the probability mass that was truncated or not yet accounted
    for, e.g. P(W > tmax) for waiting times.
    """

    support: dict[Hashable, float]
    tail: float = 0.0

    def __post_init__(self) -> None:
        for value, probability in self.support.items():
            if not (0.0 < probability <= 1.0 + 1e-12):
                raise ValidationError(
                    f"probability {probability!r} of value {value!r} is not in (0, 1]"
                )
        if self.tail < -NORMALIZATION_TOLERANCE:
            raise ValidationError(f"negative tail mass {self.tail!r}")
        total = sum(self.support.values()) + self.tail
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise ValidationError(f"distribution mass {total!r} is not 1")

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[tuple[Hashable, float]],
        tail: float | None = None,
    ) -> "Distribution":
        """Accumulate (value, probability) pairs, dropping zero entries.

        Without an explicit tail, whatever is missing from 1 becomes the tail.
        """
        support: dict[Hashable, float] = {}
        for value, probability in pairs:
            support[value] = support.get(value, 0.0) + float(probability)
        support = {
            value: min(probability, 1.0)
            for value, probability in sorted(
                support.items(), key=lambda item: value_sort_key(item[0])
            )
            if probability > 0.0
        }
        if tail is None:
            tail = max(0.0, 1.0 - sum(support.values()))
        return cls(support, max(0.0, float(tail)))

    @classmethod
    def dirac(cls, value: Hashable) -> "Distribution":
        return cls({value: 1.0})

    def __getitem__(self, value: Hashable) -> float:
        return self.support.get(value, 0.0)

    def __len__(self) -> int:
        return len(self.support)

    def items(self) -> list[tuple[Hashable, float]]:
        return sorted(self.support.items(), key=lambda item: value_sort_key(item[0]))

    def total(self) -> float:
        return sum(self.support.values())

    def mean(self) -> float:
        return sum(float(value) * probability for value, probability in self.support.items())

    def cdf(self, value: Hashable) -> float:
        return sum(p for v, p in self.support.items() if v <= value)

    def at_least(self, value: Hashable) -> float:
        # The tail always lies beyond the reported support.
        return sum(p for v, p in self.support.items() if v >= value) + self.tail

    def marginal(self, key: Callable[[Hashable], Hashable]) -> "Distribution":
        return Distribution.from_pairs(
            ((key(value), probability) for value, probability in self.support.items()),
            tail=self.tail,
        )

    def restricted(self, values: Iterable[Hashable]) -> dict[Hashable, float]:
        return {value: self[value] for value in values}

    def shifted(self, offset: int) -> "Distribution":
        return Distribution.from_pairs(
            ((value + offset, p) for value, p in self.support.items()), tail=self.tail
        )

    def max_abs_difference(self, other: "Distribution") -> float:
        values = set(self.support) | set(other.support)
        deviations = [abs(self[v] - other[v]) for v in values]
        deviations.append(abs(self.tail - other.tail))
        return max(deviations)
