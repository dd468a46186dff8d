from .base import SolverBase, recheck
from .backtracking import BacktrackingSolver
from .brute_force import BruteForceSolver
from .factory import SolverFactory

__all__ = ["SolverBase", "recheck", "BacktrackingSolver", "BruteForceSolver", "SolverFactory"]
