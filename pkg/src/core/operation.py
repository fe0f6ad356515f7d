from abc import ABC, abstractmethod
from typing import Hashable

import torch
from jaxtyping import Int64
from torch import Tensor

from ..misc.errors import DomainOverflowError, ValidationError
from .value_domain import Marker, ValueDomain


class Operation(ABC):
    """A total binary operation theta: V x E -> V with a stable tag."""

    is_truncated_addition: bool = False

    @property
    @abstractmethod
    def tag(self) -> str:
        pass

    @abstractmethod
    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        pass

    def index_map(self, domain: ValueDomain, emission: Hashable) -> Int64[Tensor, " value"]:
        """Map every value index of `domain` to the index of theta(v, e)."""
        return torch.tensor(
            [domain.index(self.apply(value, emission)) for value in domain.values],
            dtype=torch.int64,
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Operation) and other.tag == self.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    def __repr__(self) -> str:
        return self.tag


def as_count(value: Hashable) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainOverflowError(f"{value!r} is not an integer value")
    return value


class TruncatedAdd(Operation):
    """(v, e) -> min(M, v + e)."""

    is_truncated_addition = True

    def __init__(self, bound: int) -> None:
        if bound < 0:
            raise ValidationError("truncation bound must be nonnegative")
        self.bound = bound

    @property
    def tag(self) -> str:
        return f"truncated-add({self.bound})"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        return min(self.bound, as_count(value) + as_count(emission))

    def index_map(self, domain: ValueDomain, emission: Hashable) -> Int64[Tensor, " value"]:
        if not domain.is_range or domain.range_size != len(domain):
            return super().index_map(domain, emission)
        result = (domain.range_values() + as_count(emission)).clamp(max=self.bound)
        if (result < domain.range_lo).any() or (result > domain.range_hi).any():
            raise DomainOverflowError(f"{self.tag} leaves the value range")
        return result - domain.range_lo


class Maximum(Operation):
    @property
    def tag(self) -> str:
        return "max"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        return max(value, emission)


class WaitingOperation(Operation):
    """Rewrites an operation so that entering a target value is recorded once.

    The first time the wrapped operation lands in `targets` the value becomes
    REACHED; from REACHED (and from FLUSHED) it moves on to FLUSHED.
    """

    def __init__(
        self,
        inner: Operation,
        targets: frozenset,
        base_domain: ValueDomain,
    ) -> None:
        self.inner = inner
        self.targets = targets
        self.base_domain = base_domain

    @property
    def tag(self) -> str:
        targets = ",".join(sorted(map(str, self.targets)))
        return f"waiting({self.inner.tag};{targets})"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        if value in (Marker.REACHED, Marker.FLUSHED):
            return Marker.FLUSHED
        result = self.inner.apply(value, emission)
        return Marker.REACHED if result in self.targets else result

    def index_map(self, domain: ValueDomain, emission: Hashable) -> Int64[Tensor, " value"]:
        inner = self.inner.index_map(self.base_domain, emission)
        is_target = torch.tensor(
            [value in self.targets for value in self.base_domain.values],
            dtype=torch.bool,
        )
        reached = domain.index(Marker.REACHED)
        flushed = domain.index(Marker.FLUSHED)
        mapped = torch.where(is_target[inner], torch.full_like(inner, reached), inner)
        return torch.cat([mapped, torch.tensor([flushed, flushed], dtype=torch.int64)])
