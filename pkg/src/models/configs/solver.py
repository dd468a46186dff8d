from pydantic import BaseModel, Field

from models.common import SolverStrategy


# === Solver Config

class SolverConfig(BaseModel):
    strategy: SolverStrategy = Field("backtracking", description="Solver used for colorability")
    brute_force_max_classes: int = Field(25, description="Class-count guard for the brute-force oracle")
