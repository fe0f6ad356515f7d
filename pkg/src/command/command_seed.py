from dataclasses import dataclass
from typing import Literal

from ..misc.benchmarker import Benchmarker
from ..seedstat import MultipleSeed, parse_homology, seed_hit_distribution
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class CommandSeedCfg:
    name: Literal["seed"]
    seeds: list[str]
    homology: str
    n: int
    k: int


class CommandSeed(Command[CommandSeedCfg]):
    @property
    def needs_text_model(self) -> bool:
        # The homology model replaces the text model.
        return False

    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        seeds = MultipleSeed.parse(self.cfg.seeds)
        homology = parse_homology(self.cfg.homology)
        with benchmarker.time("distribution"):
            distribution = seed_hit_distribution(
                seeds, homology.text_model(), self.cfg.n, self.cfg.k
            )
        metadata = {
            "seeds": ",".join(self.cfg.seeds),
            "homology": self.cfg.homology,
            "n": self.cfg.n,
            "k": self.cfg.k,
            "sensitivity": 1.0 - distribution[0],
        }
        return CommandOutput(distribution, metadata)
