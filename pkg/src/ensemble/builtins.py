from fractions import Fraction
from typing import Callable, Dict, List

from models import Ensemble, Povm, QubitOperator
from operators import complement, scale
from .errors import UnknownBuiltinError

_HALF = Fraction(1, 2)


def _halves(*operators: QubitOperator) -> List[QubitOperator]:
    """[P/2, P_perp/2, Q/2, Q_perp/2, ...] in argument order."""
    out: List[QubitOperator] = []
    for p in operators:
        out.extend([scale(p, _HALF), scale(complement(p), _HALF)])
    return out


def _one() -> Ensemble:
    return Ensemble(name="one", povms=[Povm(elements=[QubitOperator.identity()])])


def _half_half() -> Ensemble:
    half = scale(QubitOperator.identity(), _HALF)
    return Ensemble(name="half-half", povms=[Povm(elements=[half, half])])


def _cabello_xyz() -> Ensemble:
    # A, B, C are the +1 projectors along z, x, y
    a = QubitOperator.projector("z")
    b = QubitOperator.projector("x")
    c = QubitOperator.projector("y")
    return Ensemble(
        name="cabello-xyz",
        povms=[
            Povm(elements=_halves(a, b)),
            Povm(elements=_halves(a, c)),
            Povm(elements=_halves(b, c)),
        ],
    )


def _half_split() -> Ensemble:
    # five operators over ten slots, each in exactly two of three POVMs
    half = scale(QubitOperator.identity(), _HALF)
    z = QubitOperator.projector("z")
    x = QubitOperator.projector("x")
    return Ensemble(
        name="half-split",
        povms=[
            Povm(elements=[half, *_halves(z)]),
            Povm(elements=[half, *_halves(x)]),
            Povm(elements=_halves(z, x)),
        ],
    )


_BUILTINS: Dict[str, Callable[[], Ensemble]] = {
    "one": _one,
    "half-half": _half_half,
    "cabello-xyz": _cabello_xyz,
    "half-split": _half_split,
}


def builtin_names() -> List[str]:
    return list(_BUILTINS)


def builtin(name: str) -> Ensemble:
    if name not in _BUILTINS:
        raise UnknownBuiltinError(f"unknown builtin '{name}', expected one of {builtin_names()}")
    return _BUILTINS[name]()
