class MinimalityError(Exception):
    """Base exception for pattern enumeration and theorem checks"""
    pass


class PatternTooLargeError(MinimalityError):
    """Shape exceeds the slot guard"""
    pass


class UnsupportedSemanticsError(MinimalityError):
    """No pattern-level sweep exists for this semantics"""
    pass


class InvalidShapeError(MinimalityError, ValueError):
    """Shape has no POVMs or a non-positive size"""
    pass
