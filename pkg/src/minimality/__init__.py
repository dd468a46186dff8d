from .errors import InvalidShapeError, MinimalityError, PatternTooLargeError, UnsupportedSemanticsError
from .canonical import canonicalize, canonical_key, rename, pattern_from_problem, parse_pattern, cabello_pattern
from .enumerate import (
    canonical_patterns,
    enumerate_patterns,
    passes_filters,
    unique_complements,
    unique_completion,
    lone_identity,
    has_repeats,
)
from .sweep import pattern_problem, pattern_verdict, sweep
from .theorems import verify_theorem, below_minimum_shapes, MINIMAL_SHAPE

__all__ = [
    "MinimalityError",
    "InvalidShapeError",
    "PatternTooLargeError",
    "UnsupportedSemanticsError",
    "canonicalize",
    "canonical_key",
    "rename",
    "pattern_from_problem",
    "parse_pattern",
    "cabello_pattern",
    "canonical_patterns",
    "enumerate_patterns",
    "passes_filters",
    "unique_complements",
    "unique_completion",
    "lone_identity",
    "has_repeats",
    "pattern_problem",
    "pattern_verdict",
    "sweep",
    "verify_theorem",
    "below_minimum_shapes",
    "MINIMAL_SHAPE",
]
