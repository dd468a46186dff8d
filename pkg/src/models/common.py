from typing import Literal

Semantics = Literal["identical", "distinct", "nonproportional", "heavy"]

SEMANTICS: tuple[Semantics, ...] = ("identical", "distinct", "nonproportional", "heavy")

OutputFormat = Literal["human", "record"]

SolverStrategy = Literal["backtracking", "brute-force"]

TheoremId = Literal["t1", "t2", "t3"]

Axis = Literal["x", "y", "z"]
