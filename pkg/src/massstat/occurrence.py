from typing import Hashable

from ..core import ValueDomain, value_distribution
from ..core.operation import Operation, as_count
from ..core.value_domain import Marker
from ..daa import paa_from_daa
from ..misc.errors import ValidationError
from ..textmodel import TextModel
from .cleavage import START, CleavageRule, cleavage_daa, is_end, with_operations
from .fragments import residue_roots
from .masses import MassTable, scaled_mass
from .missed import apply_missed_cleavage


class AbsorbingAdd(Operation):
    """Addition saturating at `cap` that leaves ABSORBED alone."""

    def __init__(self, cap: int) -> None:
        self.cap = cap

    @property
    def tag(self) -> str:
        return f"absorbing-add({self.cap})"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        if value is Marker.ABSORBED:
            return value
        return min(as_count(value) + as_count(emission), self.cap)


class MassWindow(Operation):
    """Closes a fragment: ABSORBED if its mass lies in [lo, hi], else a new fragment starts."""

    def __init__(self, lo: int, hi: int, cap: int) -> None:
        self.lo = lo
        self.hi = hi
        self.cap = cap

    @property
    def tag(self) -> str:
        return f"mass-window({self.lo},{self.hi},{self.cap})"

    def apply(self, value: Hashable, emission: Hashable) -> Hashable:
        if value is Marker.ABSORBED or self.lo <= as_count(value) <= self.hi:
            return Marker.ABSORBED
        return min(as_count(emission), self.cap)


def mass_window(masses: MassTable, mass: float, delta: float) -> tuple[int, int]:
    if delta < 0:
        raise ValidationError("mass tolerance must be nonnegative")
    lo = max(scaled_mass(mass - delta, masses.scale), 0)
    hi = scaled_mass(mass + delta, masses.scale)
    if hi < lo:
        raise ValidationError(f"mass window [{mass - delta}, {mass + delta}] is empty")
    return lo, hi


def mass_occurrence_probability(
    model: TextModel,
    rule: CleavageRule,
    masses: MassTable,
    n: int,
    mass: float,
    delta: float = 0.0,
    p_miss: float = 0.0,
) -> float:
    """P(cleaving a random protein of length n yields a fragment of mass mass +- delta Da)."""
    if n < 1:
        raise ValidationError("protein length must be at least 1")
    lo, hi = mass_window(masses, mass, delta)
    # Masses above the window only need to be told apart from it.
    cap = hi + 1
    daa = with_operations(
        cleavage_daa(rule, masses, cap, split=True),
        ValueDomain.integer_range(0, cap, extra=(Marker.ABSORBED,)),
        {False: AbsorbingAdd(cap), True: MassWindow(lo, hi, cap)},
    )

    def emission(q: int):
        label = daa.labels[q]
        if label == START:
            return ((0, 1.0),)
        return masses.emission(label[1] if is_end(label) else label)

    paa = paa_from_daa(daa, model, emission, residue_roots(daa, model))
    distribution = value_distribution(apply_missed_cleavage(paa, p_miss), n)
    # The last fragment is never closed by an end state.
    return distribution[Marker.ABSORBED] + sum(distribution[v] for v in range(lo, hi + 1))
