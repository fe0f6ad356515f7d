import csv
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

from ..core.paa import Emission
from ..misc.errors import ValidationError

DEFAULT_MASS_TABLE = Path(__file__).resolve().parents[2] / "assets" / "monoisotopic_masses.tsv"
DEFAULT_SCALE = 10
MASS_TOLERANCE = 1e-9

# (mass in Da, probability)
MassDistribution = tuple[tuple[float, float], ...]


def scaled_mass(mass: float, scale: int) -> int:
    """Integer mass units, rounding halves away from zero."""
    scaled = abs(mass) * scale
    return int(math.copysign(math.floor(scaled + 0.5), mass))


def check_distribution(distribution: MassDistribution, what: str) -> None:
    if not distribution:
        raise ValidationError(f"{what} has an empty mass distribution")
    if any(p < 0 for _, p in distribution):
        raise ValidationError(f"{what} has a negative probability")
    if abs(sum(p for _, p in distribution) - 1) > MASS_TOLERANCE:
        raise ValidationError(f"mass distribution of {what} does not sum to 1")
    if any(mass < 0 for mass, _ in distribution):
        raise ValidationError(f"{what} has a negative mass")


def mixture(
    distribution: MassDistribution,
    shift: float,
    probability: float,
) -> MassDistribution:
    """(1 - probability) * distribution + probability * (distribution + shift)."""
    if not 0 <= probability <= 1:
        raise ValidationError("modification probability must lie in [0, 1]")
    if probability == 0:
        return distribution
    result = [(mass, p * (1 - probability)) for mass, p in distribution if probability < 1]
    result.extend((mass + shift, p * probability) for mass, p in distribution)
    return tuple(result)


@dataclass(frozen=True)
class MassTable:
    """Residue mass distributions in Da and the scale to integer mass units.

    `terminal` is added once per protein; it carries whole-protein
    modifications and is a Dirac at 0 unless a global modification is set.
    """

    residues: dict[str, MassDistribution]
    scale: int = DEFAULT_SCALE
    terminal: MassDistribution = field(default=((0.0, 1.0),))

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise ValidationError("mass scale must be a positive integer")
        for residue, distribution in self.residues.items():
            if len(residue) != 1:
                raise ValidationError(f"residue {residue!r} is not a single character")
            check_distribution(distribution, f"residue {residue}")
        check_distribution(self.terminal, "the terminal modification")

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(self.residues)

    def integer_distribution(self, distribution: MassDistribution) -> Emission:
        merged: dict[int, float] = {}
        for mass, p in distribution:
            key = scaled_mass(mass, self.scale)
            merged[key] = merged.get(key, 0.0) + p
        return tuple(sorted((mass, p) for mass, p in merged.items() if p > 0))

    def emission(self, residue: str) -> Emission:
        try:
            return self.integer_distribution(self.residues[residue])
        except KeyError:
            raise ValidationError(f"no mass for residue {residue!r}")

    def terminal_emission(self) -> Emission:
        return self.integer_distribution(self.terminal)

    def nominal(self, residue: str) -> int:
        """The most probable integer mass of a residue."""
        return max(self.emission(residue), key=lambda item: item[1])[0]

    def max_mass(self) -> int:
        return max(mass for residue in self.residues for mass, _ in self.emission(residue))

    def peptide_mass(self, peptide: str) -> int:
        """Integer mass of a peptide built from the nominal residue masses."""
        return sum(self.nominal(residue) for residue in peptide)


def load_mass_table(path: Path = DEFAULT_MASS_TABLE, scale: int = DEFAULT_SCALE) -> MassTable:
    """Read `residue<TAB>mass[<TAB>probability]` lines.

    Repeating a residue lists further isotopic peaks; a missing probability
    means a single monoisotopic mass.
    """
    residues: dict[str, list[tuple[float, float]]] = {}
    with Path(path).open(newline="") as f:
        for line_number, row in enumerate(csv.reader(f, delimiter="\t"), start=1):
            if not row or row[0].startswith("#"):
                continue
            if len(row) not in (2, 3):
                raise ValidationError(f"{path}:{line_number}: expected 2 or 3 columns")
            try:
                mass = float(row[1])
                probability = float(row[2]) if len(row) == 3 else 1.0
            except ValueError:
                raise ValidationError(f"{path}:{line_number}: mass is not a number")
            residues.setdefault(row[0].strip(), []).append((mass, probability))
    return MassTable({r: tuple(d) for r, d in residues.items()}, scale)


def apply_ptm(masses: MassTable, residue: str, shift: float, probability: float) -> MassTable:
    """Modify `residue` by `shift` Da with the given probability."""
    if residue not in masses.residues:
        raise ValidationError(f"no mass for residue {residue!r}")
    modified = mixture(masses.residues[residue], shift, probability)
    check_distribution(modified, f"modified residue {residue}")
    return replace(masses, residues={**masses.residues, residue: modified})


def apply_global_ptm(masses: MassTable, shift: float, probability: float) -> MassTable:
    """A whole-protein modification, carried by the first fragment."""
    modified = mixture(masses.terminal, shift, probability)
    check_distribution(modified, "the terminal modification")
    return replace(masses, terminal=modified)
