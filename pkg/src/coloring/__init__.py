from .errors import ColoringError, InadmissibleEnsembleError, HeavyNoAssignableError, TooLargeError
from .identify import identify, check_admissible, proportional_pairs
from .parity import parity_witness
from .solvers import SolverBase, SolverFactory, BacktrackingSolver, BruteForceSolver, recheck
from .verdicts import solve, brute_force, decide, build_record

__all__ = [
    "ColoringError",
    "InadmissibleEnsembleError",
    "HeavyNoAssignableError",
    "TooLargeError",
    "identify",
    "check_admissible",
    "proportional_pairs",
    "parity_witness",
    "SolverBase",
    "SolverFactory",
    "BacktrackingSolver",
    "BruteForceSolver",
    "recheck",
    "solve",
    "brute_force",
    "decide",
    "build_record",
]
