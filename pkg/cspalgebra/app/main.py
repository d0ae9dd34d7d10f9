"""Command line for cspalgebra."""

import argparse
import logging
import sys
from collections.abc import Sequence

from cspalgebra.domain.exceptions import DomainError
from cspalgebra.engine.exceptions import CapExceededError, EngineError, VerificationError
from cspalgebra.formats import FormatError

from .commands import COMMANDS
from .exceptions import AppError
from .exit_codes import ExitCode
from .settings import LOG_LEVELS, settings

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s]: %(message)s"

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, stream=sys.stderr, force=True)


def create_parser() -> argparse.ArgumentParser:
    """Build the parser with every subcommand registered."""
    parser = argparse.ArgumentParser(
        prog="cspalgebra",
        description="Polymorphism checks, solvers, reductions and gadgets for finite templates",
    )
    parser.add_argument(
        "--log-level", choices=LOG_LEVELS, default=None, help=f"logging level (default {settings.log_level})"
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="override the search cap for this run")
    common.add_argument(
        "--seed-order", choices=("mrv", "index"), default=None, help="variable order of the search"
    )
    common.add_argument("--json", metavar="PATH", default=None, help="write a JSON report ('-' for stdout)")

    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(sub, common)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit status."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.OK if e.code == 0 else ExitCode.USAGE
    configure_logging(args.log_level or settings.log_level)

    try:
        return int(args.handler(args))
    except CapExceededError as e:
        logger.info("refused by a cap: %s", e)
        print(f"refused: {e}", file=sys.stderr)
        return ExitCode.CAP
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return ExitCode.NEGATIVE
    except (AppError, FormatError, DomainError, EngineError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE


if __name__ == "__main__":
    sys.exit(run_cli())
