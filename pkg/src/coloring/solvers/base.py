from abc import ABC, abstractmethod
from typing import List, Optional

from models import ColoringProblem, Verdict
from models.configs import SolverConfig


def recheck(p: ColoringProblem, certificate: List[Optional[bool]]) -> bool:
    """Every POVM's yes-count over assignable classes, with multiplicity, hits its target."""
    if len(certificate) != p.class_count:
        return False
    for class_id, value in enumerate(certificate):
        if value is None or (value and not p.classes[class_id].assignable):
            return False
    for row, target in zip(p.incidence, p.targets):
        if sum(multiplicity for class_id, multiplicity in row if certificate[class_id]) != target:
            return False
    return True


class SolverBase(ABC):
    """Base class for colorability solvers."""

    def __init__(self, config: Optional[SolverConfig] = None):
        self.config = config or SolverConfig()

    @property
    @abstractmethod
    def name(self) -> str:
        """Return the solver name."""
        pass

    @abstractmethod
    def solve(self, p: ColoringProblem) -> Verdict:
        """Decide colorability; a Colorable verdict carries a certificate."""
        raise NotImplementedError
