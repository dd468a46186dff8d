from models import Semantics
from coloring import SolverFactory, BruteForceSolver, build_record, decide, identify, recheck
from utils import EnsembleLoader, logger
from runner.base import ExitCode, Runner


class ColorRunner(Runner):
    """Identify, decide, and optionally cross-check with the brute-force oracle."""

    def __init__(self, loader: EnsembleLoader, semantics: Semantics, oracle: bool = False):
        super().__init__()
        self.loader = loader
        self.semantics = semantics
        self.oracle = oracle
        self.solver = SolverFactory.create_from_config()

    def run(self) -> ExitCode:
        e = self.loader.load()
        p = identify(e, self.semantics, allow_zero_elements=self.config.ensemble.allow_zero_elements)
        logger.info(f"Coloring '{e.name}' under {self.semantics}: {p.class_count} classes, {self.solver.name} solver")

        verdict = decide(p, self.solver)
        if verdict.colorable and not recheck(p, verdict.certificate):
            raise RuntimeError(f"{self.solver.name} solver returned an invalid certificate")

        agrees = True
        if self.oracle:
            oracle = BruteForceSolver(self.config.solver).solve(p)
            agrees = oracle.colorable == verdict.colorable
            if not agrees:
                logger.warning(
                    f"Oracle disagreement on '{e.name}': solver says "
                    f"{'colorable' if verdict.colorable else 'uncolorable'}, brute force says "
                    f"{'colorable' if oracle.colorable else 'uncolorable'}"
                )

        record = build_record(e.name, self.semantics, p, verdict)
        if self.records:
            self.emit_record(record)
        else:
            lines = [
                f"ensemble:  {e.name}",
                f"semantics: {self.semantics}",
                f"classes:   {p.class_count}",
                f"verdict:   {'Colorable' if verdict.colorable else 'Uncolorable'}",
            ]
            if verdict.colorable:
                yes = [str(i) for i, bit in enumerate(verdict.certificate) if bit]
                lines.append(f"yes:       classes {', '.join(yes)}")
            else:
                lines.append(f"witness:   {verdict.witness_kind}")
            if self.oracle:
                lines.append(f"oracle:    {'agrees' if agrees else 'DISAGREES'}")
            self.emit(lines)

        if not agrees:
            return ExitCode.ORACLE_DISAGREEMENT
        return ExitCode.OK if verdict.colorable else ExitCode.UNCOLORABLE
