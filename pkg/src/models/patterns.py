from string import ascii_lowercase
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .common import Semantics, TheoremId


class Pattern(BaseModel):
    """Abstract ensemble: each POVM is a sorted tuple of integer labels.

    Only coincidence structure is kept; operators are forgotten. Labels are
    non-negative integers, rendered as letters.
    """

    model_config = ConfigDict(frozen=True)

    povms: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _sorted_slots(self) -> "Pattern":
        for povm in self.povms:
            if not povm:
                raise ValueError("a pattern POVM needs at least one slot")
            if list(povm) != sorted(povm) or povm[0] < 0:
                raise ValueError(f"slots must be sorted non-negative labels, got {povm}")
        return self

    @classmethod
    def of(cls, *povms) -> "Pattern":
        return cls(povms=tuple(tuple(sorted(p)) for p in povms))

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(p) for p in self.povms)

    @property
    def labels(self) -> List[int]:
        return sorted({label for povm in self.povms for label in povm})

    @property
    def slots(self) -> Tuple[int, ...]:
        """Flat slot string, POVM after POVM."""
        return tuple(label for povm in self.povms for label in povm)

    def __str__(self) -> str:
        def name(label: int) -> str:
            if label < len(ascii_lowercase):
                return ascii_lowercase[label]
            return f"x{label}"

        return ",".join("{" + ",".join(name(l) for l in povm) + "}" for povm in self.povms)


class SweepReport(BaseModel):
    shape: List[int]
    semantics: Semantics
    total: int = Field(..., description="Canonical patterns enumerated before filtering")
    filtered: int = Field(..., description="Canonical patterns passing the structural filters")
    colorable: int
    uncolorable: List[str] = Field(default_factory=list, description="Canonical uncolorable patterns")

    @model_validator(mode="after")
    def _accounted(self) -> "SweepReport":
        if self.colorable + len(self.uncolorable) != self.filtered:
            raise ValueError("colorable + uncolorable must equal the filtered count")
        return self

    @property
    def all_colorable(self) -> bool:
        return not self.uncolorable


class TheoremCheck(BaseModel):
    name: str
    expected: str
    observed: str
    passed: bool


class TheoremReport(BaseModel):
    theorem: TheoremId
    claim: str
    passed: bool
    checks: List[TheoremCheck] = Field(default_factory=list)
    witness: Optional[str] = Field(None, description="Canonical uncolorable pattern at the minimum")
