from typing import Sequence

from models import Semantics, TheoremId
from minimality import sweep, verify_theorem
from utils import logger, sweep_table, theorem_lines
from runner.base import ExitCode, Runner


class SweepRunner(Runner):

    def __init__(self, shape: Sequence[int], semantics: Semantics, list_uncolorable: bool = False):
        super().__init__()
        self.shape = list(shape)
        self.semantics = semantics
        self.list_uncolorable = list_uncolorable

    def run(self) -> ExitCode:
        logger.info(f"Sweeping shape {self.shape} under {self.semantics}")
        report = sweep(
            self.shape,
            self.semantics,
            self.config.sweep,
            max_workers=self.config.threading.max_workers,
        )

        if self.records:
            self.emit_record(report)
        else:
            lines = sweep_table([report])
            if self.list_uncolorable and report.uncolorable:
                lines.append("")
                lines.extend(report.uncolorable)
            self.emit(lines)
        return ExitCode.OK if report.all_colorable else ExitCode.UNCOLORABLE


class TheoremRunner(Runner):

    def __init__(self, theorem: TheoremId):
        super().__init__()
        self.theorem = theorem

    def run(self) -> ExitCode:
        report = verify_theorem(self.theorem)
        if self.records:
            self.emit_record(report)
        else:
            self.emit(theorem_lines(report))
        return ExitCode.OK if report.passed else ExitCode.THEOREM_FAILED
