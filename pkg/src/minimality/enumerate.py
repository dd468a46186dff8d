"""Isomorph-free enumeration of coincidence patterns for a shape.

Candidates are grown POVM by POVM: every new POVM draws from the labels
already in use and introduces fresh labels in increasing order, so each
label pattern is reached at least once. Candidates are canonicalized and
deduplicated in generation order.
"""
from collections import Counter
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from models import Pattern, Semantics
from .canonical import canonicalize
from .errors import InvalidShapeError, PatternTooLargeError, UnsupportedSemanticsError

DEFAULT_MAX_SLOTS = 14


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Integer partitions of n, parts non-increasing."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _povm_choices(size: int, next_label: int, repeats: bool) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """(sorted POVM, labels introduced) for every way to fill `size` slots."""
    existing = range(next_label)
    pick = combinations_with_replacement if repeats else combinations
    for reused in range(size + 1):
        fresh = size - reused
        fresh_splits = _partitions(fresh) if repeats else [(1,) * fresh]
        for split in list(fresh_splits):
            new = [next_label + t for t, count in enumerate(split) for _ in range(count)]
            for old in pick(existing, reused):
                yield tuple(sorted(old + tuple(new))), len(split)


def _candidates(shape: Sequence[int], repeats: bool) -> Iterator[Pattern]:
    def grow(prefix: List[Tuple[int, ...]], next_label: int) -> Iterator[Pattern]:
        if len(prefix) == len(shape):
            yield Pattern(povms=tuple(prefix))
            return
        for povm, introduced in _povm_choices(shape[len(prefix)], next_label, repeats):
            yield from grow(prefix + [povm], next_label + introduced)

    yield from grow([], 0)


def check_shape(shape: Sequence[int], semantics: Semantics, max_slots: int = DEFAULT_MAX_SLOTS) -> Tuple[int, ...]:
    if semantics == "heavy":
        raise UnsupportedSemanticsError("heavy semantics depends on operator norms; no pattern sweep exists")
    if not shape or any(k < 1 for k in shape):
        raise InvalidShapeError(f"shape needs at least one POVM and positive sizes, got {list(shape)}")
    if sum(shape) > max_slots:
        raise PatternTooLargeError(f"shape {list(shape)} has {sum(shape)} slots, limit is {max_slots}")
    return tuple(sorted(shape))


def canonical_patterns(
    shape: Sequence[int],
    semantics: Semantics,
    max_slots: int = DEFAULT_MAX_SLOTS,
) -> Iterator[Pattern]:
    """Every canonical pattern of the shape, before structural filtering.

    Distinct and nonproportional semantics never repeat a label inside a POVM;
    identical semantics allows it.
    """
    shape = check_shape(shape, semantics, max_slots)
    seen = set()
    for candidate in _candidates(shape, repeats=semantics == "identical"):
        pattern = canonicalize(candidate)
        if pattern not in seen:
            seen.add(pattern)
            yield pattern


def has_repeats(pattern: Pattern) -> bool:
    return any(len(set(povm)) != len(povm) for povm in pattern.povms)


def unique_complements(pattern: Pattern) -> bool:
    """In two-element POVMs every label has at most one partner."""
    partner: Dict[int, int] = {}
    for povm in pattern.povms:
        if len(povm) != 2:
            continue
        a, b = povm
        for x, y in ((a, b), (b, a)):
            if partner.setdefault(x, y) != y:
                return False
    return True


def lone_identity(pattern: Pattern) -> bool:
    """Single-element POVMs all hold the same label, found in no larger POVM."""
    singles = {povm[0] for povm in pattern.povms if len(povm) == 1}
    if len(singles) > 1:
        return False
    return not any(label in povm for label in singles for povm in pattern.povms if len(povm) > 1)


def unique_completion(pattern: Pattern) -> bool:
    """Two POVMs that agree on all slots but one are the same POVM.

    The missing element is 𝟙 minus the shared ones, so it is the same operator
    and gets the same label.
    """
    contents = [Counter(povm) for povm in pattern.povms]
    for i, j in combinations(range(len(contents)), 2):
        if len(pattern.povms[i]) != len(pattern.povms[j]):
            continue
        if sum((contents[i] - contents[j]).values()) == 1:
            return False
    return True


def passes_filters(pattern: Pattern, semantics: Semantics) -> bool:
    if semantics != "identical" and has_repeats(pattern):
        return False
    return unique_complements(pattern) and unique_completion(pattern) and lone_identity(pattern)


def enumerate_patterns(
    shape: Sequence[int],
    semantics: Semantics,
    max_slots: int = DEFAULT_MAX_SLOTS,
) -> Iterator[Pattern]:
    """Canonical patterns that survive the structural filters, in a fixed order."""
    for pattern in canonical_patterns(shape, semantics, max_slots):
        if passes_filters(pattern, semantics):
            yield pattern
