from dataclasses import dataclass
from typing import Literal

from ..misc.errors import ValidationError
from ..textmodel import TextModel, first_order_model, iid_model

SIMPLEX_TOLERANCE = 1e-9

HomologyKind = Literal["ungapped", "gapped"]


@dataclass(frozen=True)
class HomologyModel:
    """Alignment column model.

    Ungapped alignments are i.i.d. over {0 (mismatch), 1 (match)} with match
    probability p. Gapped alignments add the gap characters 2 and 3 and follow
    a first order chain in which a gap is never directly followed by a gap in
    the other sequence.
    """

    kind: HomologyKind
    params: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.kind == "ungapped":
            if len(self.params) != 1 or not 0 <= self.params[0] <= 1:
                raise ValidationError("ungapped homology needs one probability p in [0, 1]")
        elif self.kind == "gapped":
            if len(self.params) != 3 or any(p < 0 for p in self.params):
                raise ValidationError("gapped homology needs nonnegative p0, p1, pg")
            p0, p1, pg = self.params
            if abs(p0 + p1 + 2 * pg - 1) > SIMPLEX_TOLERANCE or p0 + p1 <= 0:
                raise ValidationError("gapped homology needs p0 + p1 + 2 pg = 1 and p0 + p1 > 0")
        else:
            raise ValidationError(f"unknown homology kind {self.kind!r}")

    def text_model(self) -> TextModel:
        if self.kind == "ungapped":
            (p,) = self.params
            return iid_model({"0": 1 - p, "1": p})
        p0, p1, pg = self.params
        # After a gap, the mass of the opposite gap moves to the match states.
        p0_star = p0 + pg * p0 / (p0 + p1)
        p1_star = p1 + pg * p1 / (p0 + p1)
        matrix = [
            [p0, p1, pg, pg],
            [p0, p1, pg, pg],
            [p0_star, p1_star, pg, 0.0],
            [p0_star, p1_star, 0.0, pg],
        ]
        return first_order_model("0123", matrix, [p0, p1, pg, pg])


def homology_model(kind: HomologyKind, params: tuple[float, ...] | list[float]) -> TextModel:
    return HomologyModel(kind, tuple(float(p) for p in params)).text_model()


def parse_homology(spec: str) -> HomologyModel:
    """Read "ungapped:0.95" or "gapped:p0,p1,pg"."""
    kind, _, params = spec.partition(":")
    try:
        values = tuple(float(p) for p in params.split(","))
    except ValueError:
        raise ValidationError(f"cannot read homology parameters from {spec!r}")
    return HomologyModel(kind.strip(), values)
