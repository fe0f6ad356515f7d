from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from ..core import Distribution
from ..massstat import (
    DEFAULT_MASS_TABLE,
    CleavageRule,
    MassTable,
    apply_global_ptm,
    apply_ptm,
    fragment_length_dist,
    fragment_length_mass,
    load_mass_table,
    mass_occurrence_probability,
)
from ..massstat.fragments import FragmentKind
from ..misc.benchmarker import Benchmarker
from ..textmodel import TextModel
from .command import Command, CommandOutput


@dataclass
class PtmCfg:
    # None modifies the whole protein (carried by the first fragment).
    residue: str | None
    shift: float
    probability: float


@dataclass
class CommandMassCfg:
    name: Literal["mass"]
    mode: Literal["fragments", "occurrence"]
    cleave_after: str
    unless_before: str
    nmax: int
    mass_table: Path | None = None
    scale: int = 10
    which: FragmentKind = "first"
    k: int = 2
    p_miss: float = 0.0
    output: Literal["joint", "length", "mass"] = "joint"
    ptms: list[PtmCfg] = field(default_factory=list)
    # Used by the occurrence mode only.
    n: int = 100
    mass: float = 0.0
    delta: float = 0.0


def build_mass_table(cfg: CommandMassCfg) -> MassTable:
    path = DEFAULT_MASS_TABLE if cfg.mass_table is None else cfg.mass_table
    masses = load_mass_table(path, cfg.scale)
    for ptm in cfg.ptms:
        if ptm.residue is None:
            masses = apply_global_ptm(masses, ptm.shift, ptm.probability)
        else:
            masses = apply_ptm(masses, ptm.residue, ptm.shift, ptm.probability)
    return masses


class CommandMass(Command[CommandMassCfg]):
    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        cfg = self.cfg
        rule = CleavageRule.from_strings(
            cfg.cleave_after, cfg.unless_before, "".join(model.alphabet)
        )
        with benchmarker.time("mass_table"):
            masses = build_mass_table(cfg)
        metadata = {
            "mode": cfg.mode,
            "cleave_after": cfg.cleave_after,
            "unless_before": cfg.unless_before,
            "scale": cfg.scale,
            "p_miss": cfg.p_miss,
        }

        if cfg.mode == "occurrence":
            with benchmarker.time("distribution"):
                p = mass_occurrence_probability(
                    model, rule, masses, cfg.n, cfg.mass, cfg.delta, cfg.p_miss
                )
            metadata |= {"n": cfg.n, "mass": cfg.mass, "delta": cfg.delta}
            return CommandOutput(Distribution.from_pairs([(0, 1.0 - p), (1, p)]), metadata)

        metadata |= {"nmax": cfg.nmax, "which": cfg.which, "output": cfg.output}
        if cfg.which == "following":
            metadata["k"] = cfg.k
        with benchmarker.time("distribution"):
            if cfg.output == "length":
                distribution = fragment_length_dist(
                    model, rule, cfg.nmax, cfg.which, cfg.k, cfg.p_miss
                )
            else:
                joint = fragment_length_mass(
                    model, rule, masses, cfg.nmax, cfg.which, cfg.k, cfg.p_miss
                )
                distribution = joint.joint if cfg.output == "joint" else joint.masses()
        return CommandOutput(distribution, metadata)
