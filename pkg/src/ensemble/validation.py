from fractions import Fraction
from typing import List

from models import Ensemble, PovmIssue, QubitOperator, ValidationReport
from operators import is_psd
from .errors import InvalidEnsembleError


def validate(e: Ensemble, allow_zero_elements: bool = False) -> ValidationReport:
    """Exact validity check: PSD elements summing to the identity, per POVM.

    No tolerance exists; a report without issues means the ensemble is valid.
    """
    report = ValidationReport(ensemble=e.name, empty=not e.povms)

    for index, povm in enumerate(e.povms):
        if not povm.elements:
            report.issues.append(PovmIssue(povm=index, empty=True))
            continue

        not_psd: List[int] = [slot for slot, m in enumerate(povm.elements) if not is_psd(m)]
        zero: List[int] = []
        if not allow_zero_elements:
            zero = [slot for slot, m in enumerate(povm.elements) if m.is_zero()]

        alpha = sum((m.alpha for m in povm.elements), Fraction(0))
        r = [sum((m.r[k] for m in povm.elements), Fraction(0)) for k in range(3)]
        deficit = QubitOperator(alpha=1 - alpha, r=tuple(-c for c in r))

        if not_psd or zero or not deficit.is_zero():
            report.issues.append(PovmIssue(
                povm=index,
                not_psd=not_psd,
                zero=zero,
                deficit=None if deficit.is_zero() else deficit,
            ))

    return report


def require_valid(e: Ensemble, allow_zero_elements: bool = False) -> ValidationReport:
    report = validate(e, allow_zero_elements=allow_zero_elements)
    if not report.valid:
        raise InvalidEnsembleError(report)
    return report
