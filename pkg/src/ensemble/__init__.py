from .errors import (
    EnsembleError,
    UnknownBuiltinError,
    InvalidEnsembleError,
    EnsembleFormatError,
    EnsembleSyntaxError,
    EnsembleSemanticError,
)
from .validation import validate, require_valid
from .builtins import builtin, builtin_names
from .codec import parse, serialize

__all__ = [
    "EnsembleError",
    "UnknownBuiltinError",
    "InvalidEnsembleError",
    "EnsembleFormatError",
    "EnsembleSyntaxError",
    "EnsembleSemanticError",
    "validate",
    "require_valid",
    "builtin",
    "builtin_names",
    "parse",
    "serialize",
]
