from typing import Optional

from omegaconf import DictConfig

from .misc.errors import UsageError

cfg: Optional[DictConfig] = None


def get_cfg() -> DictConfig:
    global cfg
    return cfg


def set_cfg(new_cfg: DictConfig) -> None:
    global cfg
    cfg = new_cfg


def get_seed() -> int:
    """Seed of the current run, used by the sampling oracles."""
    if cfg is None:
        raise UsageError("no configuration has been set")
    return int(cfg.seed)
