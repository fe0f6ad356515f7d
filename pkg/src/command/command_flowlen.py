import sys
from dataclasses import dataclass, field
from typing import Literal

from ..core import Distribution
from ..flowlen import (
    NUCLEOTIDES,
    Dispensation,
    compare_orders,
    format_comparison,
    read_length_distribution,
    read_length_for_text,
)
from ..misc.benchmarker import Benchmarker
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class CommandFlowlenCfg:
    name: Literal["flowlen"]
    order: str
    flows: int
    nmax: int = 400
    # A fixed template instead of the random text model.
    text: str | None = None
    # Further orders whose expected read lengths are tabulated on stderr.
    compare: list[str] = field(default_factory=list)


class CommandFlowlen(Command[CommandFlowlenCfg]):
    @property
    def needs_text_model(self) -> bool:
        return self.cfg.text is None

    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        cfg = self.cfg
        metadata = {"order": cfg.order, "flows": cfg.flows}
        if cfg.text is not None:
            dispensation = Dispensation(cfg.order, cfg.flows, NUCLEOTIDES)
            with benchmarker.time("distribution"):
                length = read_length_for_text(cfg.text, dispensation)
            metadata["text"] = cfg.text
            return CommandOutput(Distribution.dirac(length), metadata)

        dispensation = Dispensation(cfg.order, cfg.flows, "".join(model.alphabet))
        with benchmarker.time("distribution"):
            distribution = read_length_distribution(model, dispensation, cfg.nmax)
        metadata |= {"nmax": cfg.nmax, "mean": distribution.mean()}

        if cfg.compare:
            orders = [cfg.order] + [order for order in cfg.compare if order != cfg.order]
            with benchmarker.time("compare_orders"):
                results = compare_orders(model, orders, cfg.flows, cfg.nmax, quiet)
            if not quiet:
                print(format_comparison(results), file=sys.stderr)
            metadata["best_order"] = results[0][0]
        return CommandOutput(distribution, metadata)
