from typing import List, Optional

from models import ColoringProblem, ExhaustiveSearch, Verdict
from .base import SolverBase

Values = List[Optional[bool]]


class BacktrackingSolver(SolverBase):
    """Depth-first search over classes in id order, "no" before "yes".

    Each node runs propagation to a fixpoint: a POVM at its target forces its
    open classes to "no", classes whose multiplicity overshoots are forced "no",
    and a POVM whose remaining candidates exactly make up the deficit forces
    them all to "yes". Propagation only removes impossible values, so the first
    certificate found is the lexicographically first one.
    """

    @property
    def name(self) -> str:
        return "backtracking"

    def solve(self, p: ColoringProblem) -> Verdict:
        values: Values = [None if c.assignable else False for c in p.classes]
        found = self._search(p, values)
        if found is None:
            return Verdict.uncolorable(ExhaustiveSearch())
        return Verdict.colored([bool(v) for v in found])

    def _search(self, p: ColoringProblem, values: Values) -> Optional[Values]:
        values = list(values)
        if not self._propagate(p, values):
            return None
        branch = next((i for i, v in enumerate(values) if v is None), None)
        if branch is None:
            return values
        for choice in (False, True):
            values[branch] = choice
            found = self._search(p, values)
            if found is not None:
                return found
        return None

    @staticmethod
    def _propagate(p: ColoringProblem, values: Values) -> bool:
        changed = True
        while changed:
            changed = False
            for row, target in zip(p.incidence, p.targets):
                yes = sum(m for c, m in row if values[c] is True)
                if yes > target:
                    return False
                need = target - yes
                candidates = []
                for c, m in row:
                    if values[c] is not None:
                        continue
                    if m > need:
                        values[c] = False
                        changed = True
                    else:
                        candidates.append((c, m))
                if need == 0:
                    continue
                supply = sum(m for _, m in candidates)
                if supply < need:
                    return False
                if supply == need:
                    for c, _ in candidates:
                        values[c] = True
                    changed = True
        return True
