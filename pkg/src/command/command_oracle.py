from dataclasses import dataclass
from typing import Literal

from ..algocost import cost_distribution, get_algorithm
from ..core import Distribution
from ..daa import PatternStringsCfg
from ..global_cfg import get_seed
from ..misc.benchmarker import Benchmarker
from ..misc.errors import ValidationError
from ..oracle import (
    compare,
    empirical_distribution,
    enumerate_exact,
    occurrence_ends,
    run_matcher,
)
from ..oracle.exhaustive import Evaluator
from ..patstats import occurrence_distribution
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class CommandOracleCfg:
    name: Literal["oracle"]
    check: Literal["occur", "horspool", "sunday"]
    patterns: list[str]
    n: int
    bound: int = 10
    scheme: Literal["overlapping", "match_position"] = "overlapping"
    # None enumerates every text of length n.
    samples: int | None = None
    sigma: float = 3.0


def count_evaluator(patterns: list[str], bound: int, scheme: str) -> Evaluator:
    if scheme == "match_position":
        return lambda text: min(len(occurrence_ends(patterns, text)), bound)
    return lambda text: min(
        sum(len(occurrence_ends([pattern], text)) for pattern in patterns), bound
    )


class CommandOracle(Command[CommandOracleCfg]):
    def evaluator_and_reference(self, model: TextModel) -> tuple[Evaluator, Distribution]:
        cfg = self.cfg
        if cfg.check == "occur":
            pattern = PatternStringsCfg("strings", list(cfg.patterns))
            reference = occurrence_distribution(pattern, model, cfg.n, cfg.bound, cfg.scheme)
            return count_evaluator(cfg.patterns, cfg.bound, cfg.scheme), reference

        if len(cfg.patterns) != 1:
            raise ValidationError("matcher checks take exactly one pattern")
        (pattern,) = cfg.patterns
        reference = cost_distribution(get_algorithm(cfg.check, pattern), model, cfg.n)
        return lambda text: run_matcher(cfg.check, pattern, text).cost, reference

    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        cfg = self.cfg
        with benchmarker.time("reference"):
            evaluator, reference = self.evaluator_and_reference(model)
        with benchmarker.time("oracle"):
            if cfg.samples is None:
                report = compare(enumerate_exact(evaluator, model, cfg.n), reference)
            else:
                seed = get_seed()
                sampled = empirical_distribution(evaluator, model, cfg.n, cfg.samples, seed)
                report = compare(sampled, reference)
        metadata = {
            "check": cfg.check,
            "patterns": ",".join(cfg.patterns),
            "n": cfg.n,
            "samples": "exhaustive" if report.is_exact else report.samples,
            "seed": report.seed,
            "max_abs_deviation": report.max_abs_deviation,
            "passes": report.passes(cfg.sigma),
        }
        return CommandOutput(report.distribution, metadata, report.to_dict())
