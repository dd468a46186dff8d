"""Exact predicates and arithmetic on qubit operators in Bloch form.

Every decision here is made on rationals: positivity and the norm threshold are
compared squared, so no square root is ever taken.
"""
import re
from fractions import Fraction
from typing import Optional

from models import QubitOperator, QubitState


class OperatorError(Exception):
    """Base exception for operator-core operations"""
    pass


class ZeroOperandError(OperatorError):
    """Proportionality to the zero operator is undefined"""
    pass


class NotPositiveError(OperatorError):
    """Operator is not positive semidefinite"""
    pass


class NotAnEffectError(OperatorError):
    """Operator is not an effect (0 <= M <= I)"""
    pass


class RationalSyntaxError(ValueError):
    """Text is not a rational in 'p' or 'p/q' form"""
    pass


_RATIONAL = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")

_HALF = Fraction(1, 2)


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL.match(text.strip())
    if not match:
        raise RationalSyntaxError(f"not a rational: '{text}'")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise RationalSyntaxError(f"zero denominator: '{text}'")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction) -> str:
    # Fraction is always reduced with the sign on the numerator
    return str(value)


def is_psd(m: QubitOperator) -> bool:
    """Eigenvalues are alpha +/- |r|, so PSD iff alpha >= 0 and alpha^2 >= |r|^2."""
    return m.alpha >= 0 and m.alpha * m.alpha >= m.r_norm_squared


def is_effect(m: QubitOperator) -> bool:
    return is_psd(m) and is_psd(complement(m))


def complement(m: QubitOperator) -> QubitOperator:
    return QubitOperator(alpha=1 - m.alpha, r=tuple(-c for c in m.r))


def add(a: QubitOperator, b: QubitOperator) -> QubitOperator:
    return QubitOperator(alpha=a.alpha + b.alpha, r=tuple(x + y for x, y in zip(a.r, b.r)))


def scale(m: QubitOperator, gamma: Fraction) -> QubitOperator:
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError(f"scale factor must be positive, got {gamma}")
    return QubitOperator(alpha=m.alpha * gamma, r=tuple(c * gamma for c in m.r))


def equal(a: QubitOperator, b: QubitOperator) -> bool:
    return a.coefficients == b.coefficients


def proportionality(a: QubitOperator, b: QubitOperator) -> Optional[Fraction]:
    """Return gamma > 0 with b = gamma * a, or None when no such gamma exists."""
    if a.is_zero() or b.is_zero():
        raise ZeroOperandError("proportionality is undefined for the zero operator")
    pivot = next(i for i, c in enumerate(a.coefficients) if c != 0)
    gamma = b.coefficients[pivot] / a.coefficients[pivot]
    if gamma <= 0:
        return None
    if all(y == gamma * x for x, y in zip(a.coefficients, b.coefficients)):
        return gamma
    return None


def norm_exceeds_half(m: QubitOperator) -> bool:
    """Operator norm (largest eigenvalue alpha + |r|) strictly above 1/2.

    This is exactly the condition under which m + m <= I fails, i.e. m cannot
    occur twice in one POVM.
    """
    if not is_psd(m):
        raise NotPositiveError(f"operator {m} is not positive semidefinite")
    if m.alpha > _HALF:
        return True
    gap = _HALF - m.alpha
    return m.r_norm_squared > gap * gap


def born_probability(rho: QubitState, m: QubitOperator) -> Fraction:
    """Tr(rho M) = alpha + r.s for rho = (I + s.sigma)/2."""
    if not is_effect(m):
        raise NotAnEffectError(f"operator {m} is not an effect")
    return m.alpha + sum((x * s for x, s in zip(m.r, rho.s)), Fraction(0))
