from .base import ExitCode, Runner
from .ensemble_runner import ValidateRunner, BuiltinRunner
from .coloring_runner import ColorRunner
from .minimality_runner import SweepRunner, TheoremRunner


__all__ = ["ExitCode", "Runner", "ValidateRunner", "BuiltinRunner", "ColorRunner", "SweepRunner", "TheoremRunner"]
