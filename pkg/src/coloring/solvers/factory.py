from typing import Optional

from .base import SolverBase
from .backtracking import BacktrackingSolver
from .brute_force import BruteForceSolver
from utils.logger import logger
from utils.config_manager import ConfigManager
from models.configs import SolverConfig


class SolverFactory:
    """Factory for creating colorability solvers based on strategy."""

    _providers = {
        "backtracking": BacktrackingSolver,
        "brute-force": BruteForceSolver,
    }

    @classmethod
    def create(cls, strategy: str, config: Optional[SolverConfig] = None) -> SolverBase:
        """Create a solver instance for the specified strategy."""
        if strategy not in cls._providers:
            logger.warning(f"Unknown solver strategy '{strategy}', falling back to backtracking")
            strategy = "backtracking"

        solver_class = cls._providers[strategy]
        logger.debug(f"Creating {strategy} solver")
        return solver_class(config)

    @classmethod
    def create_from_config(cls) -> SolverBase:
        """Create a solver using the singleton config."""
        config = ConfigManager().config.solver
        return cls.create(config.strategy, config)
