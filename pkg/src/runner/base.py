from abc import ABC, abstractmethod
from enum import IntEnum
from typing import Iterable

from pydantic import BaseModel

from models import YamlConfig
from utils.config_manager import ConfigManager


class ExitCode(IntEnum):
    OK = 0
    UNCOLORABLE = 1
    USAGE = 2
    INVALID_INPUT = 3
    ORACLE_DISAGREEMENT = 4
    THEOREM_FAILED = 5
    INTERNAL = 70


class Runner(ABC):
    """One CLI command. Reports go to stdout; logs stay on stderr."""

    def __init__(self):
        super().__init__()
        self.config: YamlConfig = ConfigManager().config

    @property
    def records(self) -> bool:
        return self.config.output.format == "record"

    @staticmethod
    def emit(lines: Iterable[str]) -> None:
        for line in lines:
            print(line)

    @staticmethod
    def emit_record(record: BaseModel) -> None:
        print(record.model_dump_json())

    @abstractmethod
    def run(self) -> ExitCode:
        raise NotImplementedError
