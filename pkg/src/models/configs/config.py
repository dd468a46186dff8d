from typing import Optional, Union
from pathlib import Path
from datetime import datetime
import yaml

from pydantic import BaseModel, Field

from models.common import OutputFormat
from .solver import SolverConfig
from .sweep import SweepConfig


# === Threading Config

class ThreadingConfig(BaseModel):
    max_workers: int = Field(4, description="Worker threads for sweep verdict chunks")


# === Ensemble Config

class EnsembleConfig(BaseModel):
    allow_zero_elements: bool = Field(False, description="Accept the zero operator as a POVM element")


# === Output Config

class OutputConfig(BaseModel):
    format: OutputFormat = Field("human", description="human summary or one record per line")


# === General Config


class YamlConfig(BaseModel):
    run_id: str = Field(
        default_factory=lambda: datetime.now().strftime("%Y-%m-%d:%H%M%S:%f"),
        description="Datetime-based run identifier"
    )
    task: str = Field("bks-verification", description="Task name")

    threading: ThreadingConfig = Field(default_factory=ThreadingConfig, description="Threading number of workers")
    ensemble: EnsembleConfig = Field(default_factory=EnsembleConfig, description="Ensemble validation options")
    solver: SolverConfig = Field(default_factory=SolverConfig, description="Colorability solver")
    sweep: SweepConfig = Field(default_factory=SweepConfig, description="Minimality sweep options")
    output: OutputConfig = Field(default_factory=OutputConfig, description="Report output")

    @classmethod
    def from_yaml(cls, file_path: Union[str, Path]) -> 'YamlConfig':
        """Load configuration from YAML file"""
        with open(file_path, 'r') as f:
            data: Optional[dict] = yaml.safe_load(f)
        return cls(**(data or {}))

    def to_yaml(self, file_path: Union[str, Path]) -> None:
        """Save configuration to YAML file"""
        with open(file_path, 'w') as f:
            yaml.dump(self.model_dump(), f, default_flow_style=False)
