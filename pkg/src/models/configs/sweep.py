from pydantic import BaseModel, Field


# === Sweep Config

class SweepConfig(BaseModel):
    max_slots: int = Field(14, description="Largest total slot count a sweep accepts")
    chunk_size: int = Field(256, description="Patterns per verdict chunk handed to a worker")
    progress: bool = Field(True, description="Show a progress bar on stderr")
