from dataclasses import dataclass
from typing import Literal

from ..core.recurrence import Method
from ..daa import PatternCfg, Scheme
from ..misc.benchmarker import Benchmarker
from ..patstats import occurrence_distribution
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class CommandOccurCfg:
    name: Literal["occur"]
    pattern: PatternCfg
    n: int
    bound: int
    scheme: Scheme = "overlapping"
    method: Method = "basic"


class CommandOccur(Command[CommandOccurCfg]):
    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        with benchmarker.time("distribution"):
            distribution = occurrence_distribution(
                self.cfg.pattern,
                model,
                self.cfg.n,
                self.cfg.bound,
                self.cfg.scheme,
                self.cfg.method,
            )
        metadata = {
            "pattern": self.cfg.pattern.name,
            "n": self.cfg.n,
            "bound": self.cfg.bound,
            "scheme": self.cfg.scheme,
            "method": self.cfg.method,
            "mean": distribution.mean(),
        }
        return CommandOutput(distribution, metadata)
