from models import Ensemble
from ensemble import builtin, builtin_names, serialize, validate
from utils import EnsembleLoader, logger
from runner.base import ExitCode, Runner


class ValidateRunner(Runner):

    def __init__(self, loader: EnsembleLoader):
        super().__init__()
        self.loader = loader

    def run(self) -> ExitCode:
        e: Ensemble = self.loader.load()
        report = validate(e, allow_zero_elements=self.config.ensemble.allow_zero_elements)
        logger.info(f"Validated '{e.name}': shape {e.shape}, {'valid' if report.valid else 'invalid'}")

        if self.records:
            self.emit_record(report)
        else:
            self.emit([f"{e.name}: {'valid' if report.valid else 'invalid'}", *report.lines()])
        return ExitCode.OK if report.valid else ExitCode.INVALID_INPUT


class BuiltinRunner(Runner):
    """`builtin --list`, `builtin NAME --emit`, or a short summary of NAME."""

    def __init__(self, name: str = None, emit_text: bool = False, list_names: bool = False):
        super().__init__()
        self.name = name
        self.emit_text = emit_text
        self.list_names = list_names

    def run(self) -> ExitCode:
        if self.list_names or self.name is None:
            self.emit(builtin_names())
            return ExitCode.OK

        e = builtin(self.name)
        if self.emit_text:
            print(serialize(e), end="")
            return ExitCode.OK

        lines = [f"{e.name}: {len(e.povms)} POVMs, shape ({','.join(str(k) for k in e.shape)})"]
        for index, povm in enumerate(e.povms):
            lines.append(f"  povm {index}: " + " ".join(str(m) for m in povm.elements))
        self.emit(lines)
        return ExitCode.OK
