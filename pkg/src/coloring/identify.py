"""Ensemble + identification semantics -> coloring problem.

identical / nonproportional / heavy: equal operators share one class, within and
across POVMs. distinct: slots inside a POVM never share a class; the k-th
occurrence of an operator in one POVM is identified with the k-th occurrence of
the same operator in every other POVM (occurrence-rank matching).
"""
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Tuple

from models import ClassDescriptor, ColoringProblem, Ensemble, QubitOperator, Semantics
from operators import norm_exceeds_half, proportionality
from ensemble import require_valid
from utils.logger import logger
from .errors import HeavyNoAssignableError, InadmissibleEnsembleError

SlotKey = Tuple[QubitOperator, int]


def proportional_pairs(e: Ensemble) -> Tuple[int, List[Tuple[int, Tuple[int, int], Fraction]]]:
    """Check every within-POVM slot pair for proportionality.

    Returns (pairs checked, offending (povm, (i, j), gamma) triples). Pairs holding
    the zero operator are skipped: proportionality to zero is undefined.
    """
    checked = 0
    offending: List[Tuple[int, Tuple[int, int], Fraction]] = []
    for index, povm in enumerate(e.povms):
        elements = povm.elements
        for i in range(len(elements)):
            for j in range(i + 1, len(elements)):
                if elements[i].is_zero() or elements[j].is_zero():
                    continue
                checked += 1
                gamma = proportionality(elements[i], elements[j])
                if gamma is not None:
                    offending.append((index, (i, j), gamma))
    return checked, offending


def check_admissible(e: Ensemble) -> int:
    """Raise on the first proportional pair; return the number of pairs checked."""
    checked, offending = proportional_pairs(e)
    if offending:
        povm, slots, gamma = offending[0]
        raise InadmissibleEnsembleError(povm, slots, gamma)
    return checked


def _slot_keys(e: Ensemble, semantics: Semantics) -> List[List[SlotKey]]:
    keys: List[List[SlotKey]] = []
    for povm in e.povms:
        seen: Counter = Counter()
        row: List[SlotKey] = []
        for m in povm.elements:
            rank = seen[m] if semantics == "distinct" else 0
            seen[m] += 1
            row.append((m, rank))
        keys.append(row)
    return keys


def identify(e: Ensemble, semantics: Semantics, allow_zero_elements: bool = False) -> ColoringProblem:
    require_valid(e, allow_zero_elements=allow_zero_elements)
    if semantics == "nonproportional":
        check_admissible(e)

    keys = _slot_keys(e, semantics)
    distinct_keys = sorted(
        {key for row in keys for key in row},
        key=lambda key: (key[0].sort_key(), key[1]),
    )
    ids: Dict[SlotKey, int] = {key: i for i, key in enumerate(distinct_keys)}

    classes = [
        ClassDescriptor(
            operator=m,
            rank=rank,
            assignable=norm_exceeds_half(m) if semantics == "heavy" else True,
        )
        for m, rank in distinct_keys
    ]

    incidence = []
    for index, row in enumerate(keys):
        counts = Counter(ids[key] for key in row)
        if semantics == "heavy" and not any(classes[c].assignable for c in counts):
            raise HeavyNoAssignableError(index)
        incidence.append(tuple(sorted(counts.items())))

    logger.debug(f"Identified '{e.name}' under {semantics}: {len(classes)} classes, {len(incidence)} POVMs")
    return ColoringProblem(classes=classes, incidence=incidence, targets=[1] * len(incidence))
