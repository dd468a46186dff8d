from itertools import product

from models import ColoringProblem, ExhaustiveSearch, Verdict
from .base import SolverBase, recheck
from ..errors import TooLargeError


class BruteForceSolver(SolverBase):
    """Independent oracle: every assignment over the assignable classes, in order."""

    @property
    def name(self) -> str:
        return "brute-force"

    def solve(self, p: ColoringProblem) -> Verdict:
        limit = self.config.brute_force_max_classes
        if p.class_count > limit:
            raise TooLargeError(f"{p.class_count} classes exceed the brute-force limit of {limit}")

        free = [i for i, c in enumerate(p.classes) if c.assignable]
        checked = 0
        for bits in product((False, True), repeat=len(free)):
            checked += 1
            certificate = [False] * p.class_count
            for class_id, bit in zip(free, bits):
                certificate[class_id] = bit
            if recheck(p, certificate):
                return Verdict.colored(certificate)
        return Verdict.uncolorable(ExhaustiveSearch(assignments_checked=checked))
