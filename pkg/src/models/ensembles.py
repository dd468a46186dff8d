from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .operators import QubitOperator


class Povm(BaseModel):
    """Ordered POVM elements; slot i is elements[i]. Validity is checked separately."""

    model_config = ConfigDict(frozen=True)

    elements: List[QubitOperator] = Field(default_factory=list, description="Elements by slot")

    def __len__(self) -> int:
        return len(self.elements)


class Ensemble(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Ensemble name")
    povms: List[Povm] = Field(default_factory=list, description="POVMs in file order")

    @property
    def shape(self) -> List[int]:
        return [len(povm) for povm in self.povms]

    @property
    def slot_count(self) -> int:
        return sum(self.shape)


class PovmIssue(BaseModel):
    povm: int = Field(..., description="POVM index")
    empty: bool = Field(False, description="POVM has no elements")
    not_psd: List[int] = Field(default_factory=list, description="Slots that are not positive semidefinite")
    zero: List[int] = Field(default_factory=list, description="Slots holding the zero operator")
    deficit: Optional[QubitOperator] = Field(None, description="I - sum of elements, when nonzero")


class ValidationReport(BaseModel):
    ensemble: str
    empty: bool = Field(False, description="Ensemble has no POVMs")
    issues: List[PovmIssue] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.empty and not self.issues

    def lines(self) -> List[str]:
        """One human-readable line per problem."""
        if self.empty:
            return [f"ensemble '{self.ensemble}' has no POVMs"]
        out: List[str] = []
        for issue in self.issues:
            prefix = f"povm {issue.povm}"
            if issue.empty:
                out.append(f"{prefix}: no elements")
            if issue.not_psd:
                out.append(f"{prefix}: slots {issue.not_psd} are not positive semidefinite")
            if issue.zero:
                out.append(f"{prefix}: slots {issue.zero} hold the zero operator")
            if issue.deficit is not None:
                out.append(f"{prefix}: elements do not sum to identity, deficit {issue.deficit}")
        return out
