from .command import Command, CommandOutput
from .command_algcost import CommandAlgcost, CommandAlgcostCfg
from .command_clump import CommandClump, CommandClumpCfg
from .command_flowlen import CommandFlowlen, CommandFlowlenCfg
from .command_mass import CommandMass, CommandMassCfg, PtmCfg
from .command_occur import CommandOccur, CommandOccurCfg
from .command_oracle import CommandOracle, CommandOracleCfg
from .command_seed import CommandSeed, CommandSeedCfg
from .command_wait import CommandWait, CommandWaitCfg

COMMANDS: dict[str, type[Command]] = {
    "algcost": CommandAlgcost,
    "clump": CommandClump,
    "flowlen": CommandFlowlen,
    "mass": CommandMass,
    "occur": CommandOccur,
    "oracle": CommandOracle,
    "seed": CommandSeed,
    "wait": CommandWait,
}

CommandCfg = (
    CommandOccurCfg
    | CommandWaitCfg
    | CommandClumpCfg
    | CommandAlgcostCfg
    | CommandSeedCfg
    | CommandMassCfg
    | CommandFlowlenCfg
    | CommandOracleCfg
)


def get_command(cfg: CommandCfg) -> Command:
    return COMMANDS[cfg.name](cfg)
