from dataclasses import dataclass
from typing import Literal

from ..daa import PatternCfg
from ..misc.benchmarker import Benchmarker
from ..patstats import clump_size_distribution, clump_start_distribution
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class CommandClumpCfg:
    name: Literal["clump"]
    pattern: PatternCfg
    bound: int
    epsilon: float = 1e-9
    # "size" writes the clump size distribution, "start" the distribution of
    # the automaton state in which clumps start.
    output: Literal["size", "start"] = "size"


class CommandClump(Command[CommandClumpCfg]):
    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        metadata = {"pattern": self.cfg.pattern.name, "output": self.cfg.output}
        if self.cfg.output == "start":
            with benchmarker.time("clump_start"):
                distribution = clump_start_distribution(self.cfg.pattern, model)
            return CommandOutput(distribution, metadata)

        with benchmarker.time("clump_size"):
            result = clump_size_distribution(
                self.cfg.pattern, model, self.cfg.bound, self.cfg.epsilon, quiet
            )
        metadata |= {
            "bound": self.cfg.bound,
            "epsilon": self.cfg.epsilon,
            "steps": result.steps,
            "residual": result.residual,
        }
        return CommandOutput(result.psi, metadata)
