"""Canonical form of patterns.

POVMs are taken in nondecreasing size, each written as its sorted labels.
The canonical form is the lexicographically smallest such slot string over
every reordering of equal-size POVMs and every relabeling. Labels then appear
in first-use order, so the slot string is a restricted-growth string.

The search fixes one POVM at a time and keeps only the partial numberings
whose prefix is smallest so far.
"""
import re
from collections import Counter, defaultdict
from itertools import permutations, product
from string import ascii_lowercase
from typing import Dict, Hashable, Iterator, List, Mapping, Sequence, Tuple

from models import ColoringProblem, Pattern

Block = Tuple[int, ...]


def _arrangements(labels: Sequence[int], signature: Mapping[int, Hashable]) -> Iterator[List[int]]:
    """Orders of `labels`, one per arrangement of their signatures.

    Labels sharing a signature are interchangeable for the rest of the pattern.
    """
    pools: Dict[Hashable, List[int]] = defaultdict(list)
    for label in labels:
        pools[signature[label]].append(label)
    for tags in sorted(set(permutations(signature[label] for label in labels))):
        taken = {tag: iter(pool) for tag, pool in pools.items()}
        yield [next(taken[tag]) for tag in tags]


def _numberings(povm: Block, mapping: Mapping[int, int], later: Sequence[Block]) -> Iterator[Dict[int, int]]:
    """Ways to number the labels first used in `povm`.

    Fresh labels take the next free numbers. More copies in this POVM means a
    smaller number; within equal multiplicity, labels used again later come
    before labels that never reappear.
    """
    counts = Counter(label for label in povm if label not in mapping)
    signature = {label: tuple(p.count(label) for p in later) for label in counts}
    by_multiplicity: Dict[int, List[int]] = defaultdict(list)
    for label, count in counts.items():
        by_multiplicity[count].append(label)

    groups = []
    for count in sorted(by_multiplicity, reverse=True):
        labels = by_multiplicity[count]
        reused = [label for label in labels if any(signature[label])]
        dropped = [label for label in labels if not any(signature[label])]
        groups.append([order + dropped for order in _arrangements(reused, signature)])

    start = len(mapping)
    for parts in product(*groups):
        order = [label for part in parts for label in part]
        yield {label: start + i for i, label in enumerate(order)}


def canonical_key(pattern: Pattern) -> Tuple[Block, ...]:
    povms = pattern.povms
    states = [({}, tuple(range(len(povms))))]
    key: List[Block] = []
    for size in sorted(len(p) for p in povms):
        best = None
        survivors: Dict[tuple, tuple] = {}
        for mapping, remaining in states:
            tried = set()
            for j in remaining:
                if len(povms[j]) != size or povms[j] in tried:
                    continue
                tried.add(povms[j])
                rest = tuple(k for k in remaining if k != j)
                later = [povms[k] for k in rest]
                for fresh in _numberings(povms[j], mapping, later):
                    numbering = {**mapping, **fresh}
                    block = tuple(sorted(numbering[label] for label in povms[j]))
                    if best is not None and block > best:
                        continue
                    if best is None or block < best:
                        best, survivors = block, {}
                    live = frozenset(
                        (label, n) for label, n in numbering.items() if any(label in p for p in later)
                    )
                    survivors.setdefault((live, tuple(sorted(later))), (numbering, rest))
        key.append(best)
        states = list(survivors.values())
    return tuple(key)


def canonicalize(pattern: Pattern) -> Pattern:
    return Pattern(povms=canonical_key(pattern))


def rename(pattern: Pattern, mapping: Mapping[int, int]) -> Pattern:
    """Apply a label bijection; the result is generally not canonical."""
    return Pattern.of(*([mapping[label] for label in povm] for povm in pattern.povms))


def pattern_from_problem(p: ColoringProblem) -> Pattern:
    """Forget operators: each class becomes a label, kept with multiplicity."""
    povms = [
        [class_id for class_id, multiplicity in row for _ in range(multiplicity)]
        for row in p.incidence
    ]
    return canonicalize(Pattern.of(*povms))


_POVM_TEXT = re.compile(r"\{([^{}]*)\}")


def parse_pattern(text: str) -> Pattern:
    """Inverse of str(Pattern): '{a,b},{a,c}'."""
    povms = []
    for body in _POVM_TEXT.findall(text):
        names = [name.strip() for name in body.split(",") if name.strip()]
        labels = []
        for name in names:
            if len(name) == 1 and name in ascii_lowercase:
                labels.append(ascii_lowercase.index(name))
            elif name.startswith("x") and name[1:].isdigit():
                labels.append(int(name[1:]))
            else:
                raise ValueError(f"bad pattern label '{name}'")
        povms.append(labels)
    if not povms:
        raise ValueError(f"no POVMs in pattern '{text}'")
    return Pattern.of(*povms)


def cabello_pattern() -> Pattern:
    """Six labels, three POVMs of four, every label in exactly two POVMs."""
    return canonicalize(Pattern.of([0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]))
