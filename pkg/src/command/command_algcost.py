from dataclasses import dataclass
from typing import Literal

from ..algocost import cost_distribution, expected_cost, get_algorithm, window_count_spec
from ..misc.benchmarker import Benchmarker
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class CommandAlgcostCfg:
    name: Literal["algcost"]
    algorithm: Literal["horspool", "sunday"]
    pattern: str
    n: int
    # Charge one unit per window instead of the character accesses.
    count_windows: bool = False


class CommandAlgcost(Command[CommandAlgcostCfg]):
    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        spec = get_algorithm(self.cfg.algorithm, self.cfg.pattern)
        if self.cfg.count_windows:
            spec = window_count_spec(spec)
        with benchmarker.time("distribution"):
            distribution = cost_distribution(spec, model, self.cfg.n)
        metadata = {
            "algorithm": spec.name,
            "pattern": self.cfg.pattern,
            "n": self.cfg.n,
            "expected_cost": expected_cost(distribution),
        }
        return CommandOutput(distribution, metadata)
