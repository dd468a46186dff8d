from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .common import Semantics
from .operators import QubitOperator


class ClassDescriptor(BaseModel):
    """One hidden-variable class: either a concrete operator (with occurrence rank)
    or an abstract pattern label."""

    model_config = ConfigDict(frozen=True)

    operator: Optional[QubitOperator] = Field(None, description="Canonical operator of the class")
    label: Optional[int] = Field(None, description="Abstract label, for pattern-built problems")
    rank: int = Field(0, description="Occurrence rank; only nonzero under distinct semantics")
    assignable: bool = Field(True, description="Whether the class may receive a value")


class ColoringProblem(BaseModel):
    """Exactly-one constraint system: every POVM needs yes-count `targets[i]`,
    counted with multiplicity over assignable classes."""

    model_config = ConfigDict(frozen=True)

    classes: List[ClassDescriptor]
    # per POVM: (class id, multiplicity) sorted by class id
    incidence: List[Tuple[Tuple[int, int], ...]]
    targets: List[int]

    @model_validator(mode="after")
    def _consistent(self) -> "ColoringProblem":
        if len(self.targets) != len(self.incidence):
            raise ValueError("one target per POVM is required")
        n = len(self.classes)
        for row in self.incidence:
            for class_id, multiplicity in row:
                if not 0 <= class_id < n or multiplicity < 1:
                    raise ValueError(f"bad incidence entry ({class_id}, {multiplicity})")
        return self

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def povm_count(self) -> int:
        return len(self.incidence)

    def appearance_counts(self) -> List[int]:
        counts = [0] * len(self.classes)
        for row in self.incidence:
            for class_id, multiplicity in row:
                counts[class_id] += multiplicity
        return counts


class ExhaustiveSearch(BaseModel):
    kind: Literal["exhaustive"] = "exhaustive"
    assignments_checked: Optional[int] = Field(
        None, description="Full assignments enumerated (brute force only)"
    )


class ParityArgument(BaseModel):
    kind: Literal["parity"] = "parity"
    class_counts: List[int] = Field(..., description="Total appearances of each class")
    povm_count: int = Field(..., description="Number of POVMs (odd)")


Witness = Union[ExhaustiveSearch, ParityArgument]


class Verdict(BaseModel):
    colorable: bool
    certificate: Optional[List[bool]] = Field(None, description="Class id -> yes/no")
    witness: Optional[Witness] = Field(None, discriminator="kind")

    @classmethod
    def colored(cls, certificate: List[bool]) -> "Verdict":
        return cls(colorable=True, certificate=list(certificate))

    @classmethod
    def uncolorable(cls, witness: Witness) -> "Verdict":
        return cls(colorable=False, witness=witness)

    @property
    def witness_kind(self) -> Optional[str]:
        return self.witness.kind if self.witness is not None else None


class RunRecord(BaseModel):
    """Machine-readable result of one coloring run; field order is part of the format."""

    ensemble: str
    semantics: Semantics
    classes: int
    verdict: Literal["colorable", "uncolorable"]
    witness: Optional[Literal["exhaustive", "parity"]] = None
    certificate: Optional[List[int]] = None
