from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable

import torch
from jaxtyping import Int64
from torch import Tensor

from ..misc.errors import DomainOverflowError, ValidationError


class Marker(Enum):
    """Sentinel values that live next to ordinary values in a domain."""

    REACHED = "reached"
    FLUSHED = "flushed"
    ABSORBED = "absorbed"
    ENDED = "ended"

    def __repr__(self) -> str:
        return self.value


def value_sort_key(value: Hashable) -> tuple:
    if isinstance(value, Marker):
        return (3, value.value)
    if isinstance(value, bool):
        return (0, int(value))
    if isinstance(value, (int, float)):
        return (0, value)
    if isinstance(value, tuple):
        return (1, tuple(value_sort_key(v) for v in value))
    return (2, str(value))


def format_value(value: Hashable) -> str:
    if isinstance(value, Marker):
        return value.value
    if isinstance(value, tuple):
        return ",".join(format_value(v) for v in value)
    return str(value)


@dataclass(frozen=True, eq=False)
class ValueDomain:
    """An enumerated value set.

    Integer ranges are flagged with `range_lo`/`range_hi` so that arithmetic
    operations can build their index maps with tensor ops; any additional
    values (markers, pairs) follow the range part.
    """

    values: tuple[Hashable, ...]
    range_lo: int | None = None
    range_hi: int | None = None
    _index: dict = field(init=False, repr=False)

    def __post_init__(self) -> None:
        index = {value: i for i, value in enumerate(self.values)}
        if len(index) != len(self.values):
            raise ValidationError("value domain contains duplicate values")
        if (self.range_lo is None) != (self.range_hi is None):
            raise ValidationError("range bounds must be given together")
        if self.range_lo is not None:
            expected = tuple(range(self.range_lo, self.range_hi + 1))
            if self.values[: len(expected)] != expected:
                raise ValidationError("range part of the domain is not contiguous")
        object.__setattr__(self, "_index", index)

    @classmethod
    def integer_range(
        cls,
        lo: int,
        hi: int,
        extra: Iterable[Hashable] = (),
    ) -> "ValueDomain":
        if hi < lo:
            raise ValidationError(f"empty integer range [{lo}, {hi}]")
        return cls(tuple(range(lo, hi + 1)) + tuple(extra), lo, hi)

    @classmethod
    def enumerated(cls, values: Iterable[Hashable]) -> "ValueDomain":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, value: Hashable) -> bool:
        return value in self._index

    def index(self, value: Hashable) -> int:
        try:
            return self._index[value]
        except (KeyError, TypeError):
            raise DomainOverflowError(f"value {value!r} is outside of the value domain")

    @property
    def is_range(self) -> bool:
        return self.range_lo is not None

    @property
    def range_size(self) -> int:
        return 0 if self.range_lo is None else self.range_hi - self.range_lo + 1

    def range_values(self) -> Int64[Tensor, " range"]:
        return torch.arange(self.range_lo, self.range_hi + 1, dtype=torch.int64)

    def extended(self, extra: Iterable[Hashable]) -> "ValueDomain":
        return ValueDomain(self.values + tuple(extra), self.range_lo, self.range_hi)
