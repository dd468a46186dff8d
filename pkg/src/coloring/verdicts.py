from typing import Optional

from models import ColoringProblem, RunRecord, Semantics, Verdict
from models.configs import SolverConfig
from .parity import parity_witness
from .solvers import BacktrackingSolver, BruteForceSolver, SolverBase


def solve(p: ColoringProblem) -> Verdict:
    return BacktrackingSolver().solve(p)


def brute_force(p: ColoringProblem, max_classes: int = 25) -> Verdict:
    return BruteForceSolver(SolverConfig(brute_force_max_classes=max_classes)).solve(p)


def decide(p: ColoringProblem, solver: Optional[SolverBase] = None) -> Verdict:
    """Parity shortcut first, then search; the verdict records which one fired."""
    witness = parity_witness(p)
    if witness is not None:
        return Verdict.uncolorable(witness)
    return (solver or BacktrackingSolver()).solve(p)


def build_record(ensemble: str, semantics: Semantics, p: ColoringProblem, verdict: Verdict) -> RunRecord:
    return RunRecord(
        ensemble=ensemble,
        semantics=semantics,
        classes=p.class_count,
        verdict="colorable" if verdict.colorable else "uncolorable",
        witness=verdict.witness_kind,
        certificate=[int(bit) for bit in verdict.certificate] if verdict.certificate is not None else None,
    )
