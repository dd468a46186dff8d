from fractions import Fraction
from typing import Any, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from .common import Axis


def _to_fraction(value: Any) -> Fraction:
    # bool is an int subclass; a stray True must not become 1
    if isinstance(value, bool):
        raise ValueError("boolean is not a rational coefficient")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in '{value}'")
    raise ValueError(f"expected an exact rational, got {type(value).__name__}")


_AXES: dict[str, int] = {"x": 0, "y": 1, "z": 2}


class QubitOperator(BaseModel):
    """Hermitian qubit operator in Bloch form: alpha*I + rx*X + ry*Y + rz*Z.

    Coefficients are exact rationals; the representation is canonical, so model
    equality is operator equality.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: Fraction = Field(..., description="Coefficient of the identity")
    r: Tuple[Fraction, Fraction, Fraction] = Field(..., description="Bloch vector (rx, ry, rz)")

    @field_validator("alpha", mode="before")
    @classmethod
    def _coerce_alpha(cls, value: Any) -> Fraction:
        return _to_fraction(value)

    @field_validator("r", mode="before")
    @classmethod
    def _coerce_r(cls, value: Any) -> Tuple[Fraction, Fraction, Fraction]:
        components = tuple(value)
        if len(components) != 3:
            raise ValueError("Bloch vector needs exactly three components")
        return tuple(_to_fraction(c) for c in components)

    @field_serializer("alpha")
    def _dump_alpha(self, value: Fraction) -> str:
        return str(value)

    @field_serializer("r")
    def _dump_r(self, value: Tuple[Fraction, Fraction, Fraction]) -> Tuple[str, str, str]:
        return tuple(str(c) for c in value)

    @classmethod
    def of(cls, alpha: Any, rx: Any = 0, ry: Any = 0, rz: Any = 0) -> "QubitOperator":
        return cls(alpha=alpha, r=(rx, ry, rz))

    @classmethod
    def identity(cls) -> "QubitOperator":
        return cls.of(1)

    @classmethod
    def zero(cls) -> "QubitOperator":
        return cls.of(0)

    @classmethod
    def projector(cls, axis: Axis, sign: int = 1) -> "QubitOperator":
        """Rank-1 projector onto the +/- eigenvector of the Pauli operator on `axis`."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        r = [Fraction(0)] * 3
        r[_AXES[axis]] = Fraction(sign, 2)
        return cls(alpha=Fraction(1, 2), r=tuple(r))

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, *self.r)

    @property
    def r_norm_squared(self) -> Fraction:
        return sum((c * c for c in self.r), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def sort_key(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.coefficients

    def to_matrix(self) -> np.ndarray:
        """Float complex 2x2 matrix; for cross-checks only, never for decisions."""
        a = float(self.alpha)
        x, y, z = (float(c) for c in self.r)
        return np.array(
            [[a + z, x - 1j * y],
             [x + 1j * y, a - z]],
            dtype=complex,
        )

    def __str__(self) -> str:
        rx, ry, rz = self.r
        return f"({self.alpha}, ({rx}, {ry}, {rz}))"


class QubitState(BaseModel):
    """Density operator rho = (I + s.sigma) / 2."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    s: Tuple[Fraction, Fraction, Fraction] = Field(..., description="Bloch vector of the state")

    @field_validator("s", mode="before")
    @classmethod
    def _coerce_s(cls, value: Any) -> Tuple[Fraction, Fraction, Fraction]:
        components = tuple(value)
        if len(components) != 3:
            raise ValueError("Bloch vector needs exactly three components")
        return tuple(_to_fraction(c) for c in components)

    @field_serializer("s")
    def _dump_s(self, value: Tuple[Fraction, Fraction, Fraction]) -> Tuple[str, str, str]:
        return tuple(str(c) for c in value)

    @model_validator(mode="after")
    def _inside_ball(self) -> "QubitState":
        if sum(c * c for c in self.s) > 1:
            raise ValueError("Bloch vector of a state must have length at most 1")
        return self

    @classmethod
    def of(cls, sx: Any = 0, sy: Any = 0, sz: Any = 0) -> "QubitState":
        return cls(s=(sx, sy, sz))
