from dataclasses import dataclass, fields, is_dataclass
from pathlib import Path
from typing import Optional, Type, TypeVar

from dacite import Config, from_dict
from omegaconf import DictConfig, OmegaConf

from .command import CommandCfg
from .command.output import OutputFormat
from .misc.errors import UsageError
from .textmodel import TextModelCfg


@dataclass
class RootCfg:
    command: CommandCfg
    text_model: TextModelCfg
    format: OutputFormat
    output: Optional[Path]
    benchmark_path: Optional[Path]
    quiet: bool
    seed: int


TYPE_HOOKS = {
    Path: Path,
    # YAML and override integers where floats are expected.
    float: float,
    # Hydra parses digit-only strings (e.g. the seed 11111111111) as integers.
    str: str,
}


T = TypeVar("T")


def load_typed_config(
    cfg: DictConfig,
    data_class: Type[T],
    extra_type_hooks: dict = {},
) -> T:
    return from_dict(
        data_class,
        OmegaConf.to_container(cfg),
        config=Config(type_hooks={**TYPE_HOOKS, **extra_type_hooks}),
    )


def load_typed_root_config(cfg: DictConfig) -> RootCfg:
    return load_typed_config(cfg, RootCfg)


def check_input_paths(cfg) -> None:
    """Every Path inside a command or text model config must name an existing file."""
    if not is_dataclass(cfg):
        return
    for field in fields(cfg):
        value = getattr(cfg, field.name)
        if isinstance(value, Path) and not value.is_file():
            raise UsageError(f"{field.name}: {value} does not exist")
        if is_dataclass(value):
            check_input_paths(value)
        if isinstance(value, list):
            for item in value:
                check_input_paths(item)
