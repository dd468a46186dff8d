import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, get_args

from models import SEMANTICS, SolverStrategy, YamlConfig
from utils import EnsembleLoader, logger
from utils.config_manager import ConfigError, ConfigManager
from utils.dataloader import EnsembleSourceError
from utils.logger import set_console_level
from ensemble import EnsembleError, UnknownBuiltinError
from coloring import HeavyNoAssignableError, InadmissibleEnsembleError, TooLargeError
from minimality import MinimalityError
from runner import BuiltinRunner, ColorRunner, ExitCode, Runner, SweepRunner, TheoremRunner, ValidateRunner

DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / "configs" / "default.yml"


class CliParser(argparse.ArgumentParser):
    """Usage errors print one machine-parsable line and exit 2."""

    def error(self, message: str):
        print(f"error: usage: {message}", file=sys.stderr)
        raise SystemExit(ExitCode.USAGE)


def parse_shape(text: str) -> List[int]:
    try:
        shape = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"shape must be comma-separated sizes, got '{text}'")
    if not shape or any(k < 1 for k in shape):
        raise argparse.ArgumentTypeError(f"shape needs positive sizes, got '{text}'")
    return shape


def build_parser() -> CliParser:
    parser = CliParser(prog="povm-bks", description="Verify BKS non-contextuality arguments built from qubit POVMs")
    parser.add_argument('--config', '-c', type=str, default=None,
                        help=f'Path to YAML configuration file (default: {DEFAULT_CONFIG.name} when present)')
    parser.add_argument('--output', choices=["human", "record"], default=None,
                        help='Report format; record prints one JSON object per line')
    parser.add_argument('--workers', type=int, default=None, help='Worker threads for sweeps')
    parser.add_argument('--allow-zero-elements', action='store_true', default=None,
                        help='Accept the zero operator as a POVM element')
    parser.add_argument('--solver', choices=get_args(SolverStrategy), default=None, help='Colorability solver')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')
    verbosity.add_argument('--quiet', '-q', action='store_true', help='Warnings and errors only on stderr')

    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="Check that every POVM is a valid measurement")
    validate.add_argument("file", nargs="?", help="Ensemble file")
    validate.add_argument("--builtin", dest="builtin_name", help="Builtin ensemble name")

    color = commands.add_parser("color", help="Decide one-yes-per-POVM colorability")
    color.add_argument("file", nargs="?", help="Ensemble file")
    color.add_argument("--builtin", dest="builtin_name", help="Builtin ensemble name")
    color.add_argument("--semantics", choices=SEMANTICS, required=True)
    color.add_argument("--oracle", action="store_true", help="Cross-check with the brute-force solver")

    sweep = commands.add_parser("sweep", help="Decide every canonical pattern of a shape")
    sweep.add_argument("--shape", type=parse_shape, required=True, help="Comma-separated POVM sizes, e.g. 4,4,4")
    sweep.add_argument("--semantics", choices=SEMANTICS, required=True)
    sweep.add_argument("--list-uncolorable", action="store_true", help="Print each uncolorable pattern")

    theorem = commands.add_parser("theorem", help="Reproduce a minimality theorem")
    theorem.add_argument("theorem", choices=["t1", "t2", "t3"])

    builtin = commands.add_parser("builtin", help="Inspect builtin ensembles")
    builtin.add_argument("name", nargs="?", help="Builtin ensemble name")
    builtin.add_argument("--emit", action="store_true", help="Print the ensemble file text")
    builtin.add_argument("--list", dest="list_names", action="store_true", help="List builtin names")

    return parser


def load_config(args: argparse.Namespace) -> YamlConfig:
    """Config file (explicit or default) with CLI flags layered on top."""
    manager = ConfigManager()
    if args.config:
        manager.load_config(args.config)
    elif DEFAULT_CONFIG.exists():
        manager.load_config(str(DEFAULT_CONFIG))
    else:
        manager.use_defaults()

    config = manager.config
    if args.output is not None:
        config.output.format = args.output
    if args.workers is not None:
        config.threading.max_workers = args.workers
    if args.allow_zero_elements:
        config.ensemble.allow_zero_elements = True
    if args.solver is not None:
        config.solver.strategy = args.solver
    return config


def build_runner(args: argparse.Namespace) -> Runner:
    if args.command == "validate":
        return ValidateRunner(EnsembleLoader(args.file, args.builtin_name))
    if args.command == "color":
        return ColorRunner(EnsembleLoader(args.file, args.builtin_name), args.semantics, oracle=args.oracle)
    if args.command == "sweep":
        return SweepRunner(args.shape, args.semantics, list_uncolorable=args.list_uncolorable)
    if args.command == "theorem":
        return TheoremRunner(args.theorem)
    return BuiltinRunner(args.name, emit_text=args.emit, list_names=args.list_names)


def exit_code_for(error: Exception) -> ExitCode:
    usage = (UnknownBuiltinError, EnsembleSourceError, FileNotFoundError, ConfigError, TooLargeError, MinimalityError)
    if isinstance(error, usage):
        return ExitCode.USAGE
    if isinstance(error, (EnsembleError, InadmissibleEnsembleError, HeavyNoAssignableError)):
        return ExitCode.INVALID_INPUT
    return ExitCode.INTERNAL


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.verbose:
        set_console_level(logging.DEBUG)
    elif args.quiet:
        set_console_level(logging.WARNING)

    try:
        config = load_config(args)
        logger.info(f"Running {args.command} ({config.task}, run {config.run_id})")
        return int(build_runner(args).run())
    except Exception as e:
        code = exit_code_for(e)
        if code == ExitCode.INTERNAL:
            logger.exception("Unexpected failure")
        else:
            logger.debug(f"{type(e).__name__}: {e}")
        message = " ".join(str(e).split())
        print(f"error: {type(e).__name__}: {message}", file=sys.stderr)
        return int(code)


if __name__ == "__main__":
    sys.exit(main())
