import argparse
import logging
import sys
import traceback

from constants import (
    CLI_COMMANDS,
    CLI_USAGE,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_PRECONDITION_ERROR,
    EXIT_UNEXPECTED,
    MEASURES,
)
from handlers.common import write_output
from handlers.measure import measure_handler
from handlers.report import report_handler
from handlers.sweep import sweep_handler
from handlers.validate import validate_handler
from utils.errors import (
    DimensionMismatchError,
    GridError,
    MissingParameterError,
    NotPureError,
    OutOfRangeError,
    StateParseError,
    StateValidationError,
)
from utils.logging import logger, set_console_level

PARSE_ERRORS = (StateParseError, StateValidationError, GridError, OutOfRangeError)
PRECONDITION_ERRORS = (DimensionMismatchError, MissingParameterError, NotPureError)

HANDLERS = {
    "measure": measure_handler,
    "sweep": sweep_handler,
    "report": report_handler,
    "validate": validate_handler,
}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per entry of ``CLI_COMMANDS``."""
    parser = argparse.ArgumentParser(
        prog="purify",
        description="Quantum q-divergence toolkit for measuring state purification.",
        epilog=f"Commands:\n{CLI_USAGE}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--verbose", action="store_true", help="Log debug output to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    commands = {
        name: subparsers.add_parser(name, help=info["help"], description=info["description"])
        for name, info in CLI_COMMANDS.items()
    }
    for subparser in commands.values():
        subparser.add_argument("--state", help="State file path or generator string")
        subparser.add_argument("--output", help="Write the document here instead of stdout")

    measure = commands["measure"]
    measure.add_argument("--reference", help="Reference state (sigma)")
    measure.add_argument("--measure", required=True, choices=list(MEASURES))
    measure.add_argument("--q", type=float, help="Entropic index in (0, 1)")
    measure.add_argument("--format", choices=["json", "csv"], default="json")

    sweep = commands["sweep"]
    sweep.add_argument("--reference", help="Reference state (default bell:psi-)")
    sweep.add_argument("--q-grid", help="q grid, start:stop:step or a single value")
    sweep.add_argument("--f-grid", help="Werner F grid, start:stop:step or a single value")
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")

    report = commands["report"]
    report.add_argument("--reference", help="Pure target state")
    report.add_argument("--q", type=float, action="append", help="Entropic index; repeatable")
    report.add_argument("--q-grid", help="q grid, start:stop:step or a single value")
    report.add_argument("--format", choices=["json", "csv"], default="json")

    validate = commands["validate"]
    validate.add_argument(
        "--dump", action="store_true", help="Print the normalized state document instead"
    )
    return parser


def error_handler(error: Exception) -> int:
    """Map an exception raised by a command to its exit code, logging it."""
    if isinstance(error, PARSE_ERRORS):
        logger.error(f"Invalid input: {error}")
        return EXIT_PARSE_ERROR
    if isinstance(error, PRECONDITION_ERRORS):
        logger.error(f"Precondition failed: {error}")
        return EXIT_PRECONDITION_ERROR

    logger.error(f"Exception while running command: {error}")
    tb_string = "".join(traceback.format_exception(None, error, error.__traceback__))
    logger.error(f"Exception traceback:\n{tb_string}")
    return EXIT_UNEXPECTED


def main(argv: list[str] | None = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_OK if e.code in (0, None) else EXIT_PARSE_ERROR

    if args.verbose:
        set_console_level(logging.DEBUG)

    logger.info(f"Running command {args.command}")
    try:
        document = HANDLERS[args.command](args)
        write_output(document, args.output)
    except Exception as e:
        return error_handler(e)

    logger.info(f"Command {args.command} finished")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
