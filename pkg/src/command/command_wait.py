from dataclasses import dataclass
from typing import Literal

from ..daa import PatternCfg, Scheme
from ..misc.benchmarker import Benchmarker
from ..patstats import pattern_waiting_time
from ..patstats.waiting import WaitingMode
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class CommandWaitCfg:
    name: Literal["wait"]
    pattern: PatternCfg
    tmax: int
    mode: WaitingMode = "first"
    scheme: Scheme = "overlapping"


class CommandWait(Command[CommandWaitCfg]):
    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        with benchmarker.time("distribution"):
            distribution = pattern_waiting_time(
                self.cfg.pattern,
                model,
                self.cfg.tmax,
                self.cfg.mode,
                self.cfg.scheme,
            )
        metadata = {
            "pattern": self.cfg.pattern.name,
            "tmax": self.cfg.tmax,
            "mode": self.cfg.mode,
            "scheme": self.cfg.scheme,
        }
        return CommandOutput(distribution, metadata)
