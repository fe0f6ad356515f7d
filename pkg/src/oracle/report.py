import math
from dataclasses import dataclass, field, replace
from typing import Hashable

import torch

from ..core import Distribution
from ..core.value_domain import format_value, value_sort_key
from ..misc.errors import ValidationError
from ..textmodel import TextModel
from .exhaustive import Evaluator
from .sampling import sample_texts

EXACT_TOLERANCE = 1e-12
BONFERRONI_MIN_BUCKETS = 10


@dataclass(frozen=True)
class OracleReport:
    """An exact or sampled distribution, optionally checked against a reference."""

    distribution: Distribution
    samples: int | None = None
    seed: int | None = None
    max_abs_deviation: float | None = None
    z_scores: dict[Hashable, float] = field(default_factory=dict)

    @property
    def is_exact(self) -> bool:
        return self.samples is None

    def threshold(self, sigma: float = 3.0) -> float:
        """|z| bound for the sampled buckets, Bonferroni corrected for many buckets."""
        buckets = len(self.z_scores)
        if buckets <= BONFERRONI_MIN_BUCKETS:
            return sigma
        alpha = 2 * torch.special.ndtr(torch.tensor(-sigma, dtype=torch.float64)).item()
        return -torch.special.ndtri(torch.tensor(alpha / (2 * buckets), dtype=torch.float64)).item()

    def passes(self, sigma: float = 3.0, tolerance: float = EXACT_TOLERANCE) -> bool:
        if self.max_abs_deviation is None:
            raise ValidationError("report has not been compared to a reference")
        if self.is_exact:
            return self.max_abs_deviation <= tolerance
        bound = self.threshold(sigma)
        return all(abs(z) <= bound for z in self.z_scores.values())

    def to_dict(self) -> dict:
        return {
            "distribution": [
                [format_value(value), p] for value, p in self.distribution.items()
            ],
            "tail": self.distribution.tail,
            "samples": self.samples,
            "seed": self.seed,
            "max_abs_deviation": self.max_abs_deviation,
            "z_scores": {format_value(value): z for value, z in self.z_scores.items()},
        }


def z_score(observed: float, expected: float, samples: int) -> float:
    variance = expected * (1 - expected) / samples
    if variance <= 0:
        return 0.0 if abs(observed - expected) <= EXACT_TOLERANCE else math.inf
    return (observed - expected) / math.sqrt(variance)


def compare(report: OracleReport | Distribution, reference: Distribution) -> OracleReport:
    """Deviation of a report (or an exact distribution) from a reference distribution."""
    if isinstance(report, Distribution):
        report = OracleReport(report)
    values = sorted(set(report.distribution.support) | set(reference.support), key=value_sort_key)
    deviation = report.distribution.max_abs_difference(reference)
    z_scores = {}
    if not report.is_exact:
        z_scores = {
            value: z_score(report.distribution[value], reference[value], report.samples)
            for value in values
        }
    return replace(report, max_abs_deviation=deviation, z_scores=z_scores)


def empirical_distribution(
    evaluator: Evaluator,
    model: TextModel,
    n: int,
    samples: int,
    seed: int,
) -> OracleReport:
    """Relative frequencies of evaluator(text) over sampled texts."""
    if samples < 1:
        raise ValidationError("at least one sample is needed")
    counts: dict[Hashable, int] = {}
    for text in sample_texts(model, n, samples, seed):
        value = evaluator(text)
        counts[value] = counts.get(value, 0) + 1
    distribution = Distribution.from_pairs(
        ((value, count / samples) for value, count in counts.items()), tail=0.0
    )
    return OracleReport(distribution, samples=samples, seed=seed)
