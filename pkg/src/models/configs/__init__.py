from .config import YamlConfig, ThreadingConfig, EnsembleConfig, OutputConfig
from .solver import SolverConfig
from .sweep import SweepConfig
