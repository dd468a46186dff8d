from .logger import logger
from .dataloader import EnsembleLoader
from .reports import markdown_table, sweep_table, theorem_lines
