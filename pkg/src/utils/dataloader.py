from pathlib import Path
from typing import Optional

from models import Ensemble
from ensemble import EnsembleSyntaxError, builtin, parse


class EnsembleSourceError(ValueError):
    """Neither or both of an ensemble file and a builtin name were given"""
    pass


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise EnsembleSyntaxError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, column) from e


class EnsembleLoader:
    """Resolves exactly one ensemble source: a file path or a builtin name."""

    def __init__(self, path: Optional[str] = None, builtin_name: Optional[str] = None):
        if (path is None) == (builtin_name is None):
            raise EnsembleSourceError("exactly one of an ensemble file or --builtin is required")
        self.path = path
        self.builtin_name = builtin_name

    def load(self) -> Ensemble:
        if self.builtin_name is not None:
            return builtin(self.builtin_name)

        file = Path(self.path)
        if not file.is_file():
            raise FileNotFoundError(f"Invalid path: {file}")
        return parse(_decode(file.read_bytes()))
