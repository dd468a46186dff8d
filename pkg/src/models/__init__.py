from .configs import (
    YamlConfig,
    ThreadingConfig,
    EnsembleConfig,
    OutputConfig,
    SolverConfig,
    SweepConfig,
)


from .common import (
    Semantics,
    SEMANTICS,
    OutputFormat,
    SolverStrategy,
    TheoremId,
    Axis,
)

from .operators import QubitOperator, QubitState

from .ensembles import Povm, Ensemble, PovmIssue, ValidationReport

from .coloring import (
    ClassDescriptor,
    ColoringProblem,
    ExhaustiveSearch,
    ParityArgument,
    Witness,
    Verdict,
    RunRecord,
)

from .patterns import Pattern, SweepReport, TheoremCheck, TheoremReport
