from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from models import ClassDescriptor, ColoringProblem, Pattern, Semantics, SweepReport, Verdict
from models.configs import SweepConfig
from coloring import solve
from utils.logger import logger
from .enumerate import canonical_patterns, check_shape, passes_filters
from .errors import UnsupportedSemanticsError


def pattern_problem(pattern: Pattern) -> ColoringProblem:
    """One assignable class per label; multiplicities carried over."""
    index = {label: i for i, label in enumerate(pattern.labels)}
    incidence = []
    for povm in pattern.povms:
        counts = {}
        for label in povm:
            counts[index[label]] = counts.get(index[label], 0) + 1
        incidence.append(tuple(sorted(counts.items())))
    classes = [ClassDescriptor(label=label) for label in pattern.labels]
    return ColoringProblem(classes=classes, incidence=incidence, targets=[1] * len(incidence))


def pattern_verdict(pattern: Pattern, semantics: Semantics) -> Verdict:
    if semantics == "heavy":
        raise UnsupportedSemanticsError("heavy semantics depends on operator norms; no pattern verdict exists")
    return solve(pattern_problem(pattern))


def _evaluate(chunk: Sequence[Pattern], semantics: Semantics) -> Tuple[int, List[Pattern]]:
    colorable = 0
    uncolorable: List[Pattern] = []
    for pattern in chunk:
        if pattern_verdict(pattern, semantics).colorable:
            colorable += 1
        else:
            uncolorable.append(pattern)
    return colorable, uncolorable


def sweep(shape: Sequence[int], semantics: Semantics, config: Optional[SweepConfig] = None,
          max_workers: int = 1) -> SweepReport:
    """Enumerate, filter and decide every pattern of a shape.

    Verdicts are computed in chunks, optionally on a thread pool; the report
    does not depend on chunking or worker count.
    """
    config = config or SweepConfig()
    shape = check_shape(shape, semantics, config.max_slots)

    total = 0
    kept: List[Pattern] = []
    for pattern in canonical_patterns(shape, semantics, config.max_slots):
        total += 1
        if passes_filters(pattern, semantics):
            kept.append(pattern)
    logger.debug(f"Shape {list(shape)} ({semantics}): {total} canonical patterns, {len(kept)} after filters")

    chunks = [kept[i:i + config.chunk_size] for i in range(0, len(kept), config.chunk_size)]
    progress = tqdm(total=len(chunks), desc=f"Sweeping {list(shape)}", disable=not config.progress, leave=False)

    colorable = 0
    uncolorable: List[Pattern] = []
    if max_workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results = executor.map(lambda chunk: _evaluate(chunk, semantics), chunks)
            for count, found in results:
                colorable += count
                uncolorable.extend(found)
                progress.update(1)
    else:
        for chunk in chunks:
            count, found = _evaluate(chunk, semantics)
            colorable += count
            uncolorable.extend(found)
            progress.update(1)
    progress.close()

    uncolorable.sort(key=lambda p: p.slots)
    if uncolorable:
        logger.info(f"Shape {list(shape)} ({semantics}): {len(uncolorable)} uncolorable pattern(s)")
    return SweepReport(
        shape=list(shape),
        semantics=semantics,
        total=total,
        filtered=len(kept),
        colorable=colorable,
        uncolorable=[str(p) for p in uncolorable],
    )
