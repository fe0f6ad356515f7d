from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Generic, TypeVar

from ..core import Distribution
from ..misc.benchmarker import Benchmarker
from ..textmodel import TextModel

T_cfg = TypeVar("T_cfg")


@dataclass(frozen=True)
class CommandOutput:
    distribution: Distribution
    metadata: dict[str, Any] = field(default_factory=dict)
    # Extra JSON payload, e.g. an oracle report.
    report: dict | None = None


class Command(ABC, Generic[T_cfg]):
    cfg: T_cfg
    name: str

    def __init__(self, cfg: T_cfg) -> None:
        self.cfg = cfg
        self.name = cfg.name

    @property
    def needs_text_model(self) -> bool:
        return True

    @abstractmethod
    def run(
        self,
        model: TextModel | None,
        benchmarker: Benchmarker,
        quiet: bool,
    ) -> CommandOutput:
        pass
