from ..core import Distribution
from ..daa import PatternStringsCfg, Scheme
from ..misc.errors import ValidationError
from ..patstats import occurrence_distribution
from ..textmodel import TextModel
from .seeds import MultipleSeed


def seed_pattern(seeds: MultipleSeed, model: TextModel) -> PatternStringsCfg:
    """The seed instances that can occur in texts of the model."""
    alphabet = set(model.alphabet)
    strings = sorted(s for s in seeds.pattern_set if set(s) <= alphabet)
    if not strings:
        raise ValidationError("no seed instance is expressible over the model alphabet")
    return PatternStringsCfg("strings", strings)


def seed_hit_distribution(
    seeds: MultipleSeed,
    model: TextModel,
    n: int,
    k: int,
    scheme: Scheme = "overlapping",
) -> Distribution:
    """P(exactly j hits) for j = 0..k; the tail holds P(more than k hits)."""
    if n < 1 or k < 1:
        raise ValidationError("seed hits need n >= 1 and k >= 1")
    # One extra value keeps P(k) exact.
    counts = occurrence_distribution(seed_pattern(seeds, model), model, n, k + 1, scheme)
    return Distribution.from_pairs(
        ((j, counts[j]) for j in range(k + 1)), tail=counts[k + 1]
    )


def seed_sensitivity(seeds: MultipleSeed, model: TextModel, n: int) -> float:
    """P(at least one hit), tracking only whether a hit has happened."""
    if n < 1:
        raise ValidationError("text length must be positive")
    return occurrence_distribution(seed_pattern(seeds, model), model, n, 1)[1]
