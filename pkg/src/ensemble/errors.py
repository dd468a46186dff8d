from models import ValidationReport


class EnsembleError(Exception):
    """Base exception for ensemble operations"""
    pass


class UnknownBuiltinError(EnsembleError):
    """No builtin ensemble with the requested name"""
    pass


class InvalidEnsembleError(EnsembleError):
    """Ensemble failed validation; the report says why"""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(report.lines()) or "invalid ensemble")


class EnsembleFormatError(EnsembleError):
    """Base exception for the ensemble text format, with a 1-based location"""

    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class EnsembleSyntaxError(EnsembleFormatError):
    pass


class EnsembleSemanticError(EnsembleFormatError):
    pass
