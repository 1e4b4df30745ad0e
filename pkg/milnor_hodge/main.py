"""Main entry for the milnor_hodge command line."""

import argparse
import logging
import sys
from pathlib import Path

import sentry_sdk

from .arrangement import read_arrangement
from .catalog import builtin_names
from .enums import ExitCode, OutputFormat
from .exceptions import ConsistencyError, MilnorHodgeException
from .formatting import render_builtins, render_check_summary, render_report
from .services import get_controller
from .settings import get_settings

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """
    Create the argument parser.

    Returns:
        argparse.ArgumentParser: The parser with one subparser per command.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        choices=[output.value for output in OutputFormat],
        default=OutputFormat.JSON.value,
        help="report format",
    )

    parser = argparse.ArgumentParser(
        prog="milnor-hodge",
        description="Spectrum and equivariant Hodge numbers of line arrangement "
        "Milnor fibers.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", parents=[common], help="run the pipeline on an arrangement"
    )
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=Path, help="arrangement JSON file")
    source.add_argument("--builtin", choices=builtin_names(), help="built-in name")
    analyze.add_argument(
        "--assume-beta3",
        type=int,
        choices=[0, 1, 2],
        default=None,
        help="skip the rank computation and use this beta3",
    )

    formulas = commands.add_parser(
        "formulas", parents=[common], help="assemble from (d, n3, beta3) only"
    )
    formulas.add_argument("--d", type=int, required=True, help="number of lines")
    formulas.add_argument("--n3", type=int, required=True, help="triple points")
    formulas.add_argument(
        "--beta3", type=int, required=True, choices=[0, 1, 2], help="beta3"
    )

    check = commands.add_parser(
        "check", parents=[common], help="run the invariants on random arrangements"
    )
    check.add_argument("--count", type=int, default=50, help="corpus size")
    check.add_argument("--max-d", type=int, default=9, help="largest d, at least 3")
    check.add_argument("--seed", type=int, default=0, help="corpus seed")

    commands.add_parser(
        "builtin-list", parents=[common], help="list the built-in arrangements"
    )
    return parser


def _execute(args: argparse.Namespace) -> tuple[str, ExitCode]:
    controller = get_controller()
    output = OutputFormat(args.output)

    if args.command == "builtin-list":
        return render_builtins(builtin_names(), output), ExitCode.OK

    if args.command == "check":
        summary = controller.check(args.count, args.max_d, args.seed)
        code = ExitCode.CONSISTENCY if summary.failures else ExitCode.OK
        return render_check_summary(summary, output), code

    if args.command == "formulas":
        report = controller.formulas(args.d, args.n3, args.beta3)
    elif args.builtin:
        report = controller.analyze_builtin(args.builtin, args.assume_beta3)
    else:
        report = controller.analyze(
            read_arrangement(args.input),
            source=str(args.input),
            assume_beta3=args.assume_beta3,
        )
    code = ExitCode.OK if report.passed else ExitCode.CONSISTENCY
    return render_report(report, output), code


def run(argv: list[str] | None = None) -> int:
    """
    Run the command line.

    Args:
        argv (list[str] | None): The arguments, defaults to sys.argv[1:].

    Returns:
        int: The exit code: 0 success, 1 consistency failure, 2 hypothesis
            violation or usage error, 3 parse error.
    """
    parser = create_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and args.max_d < 3:
        parser.error("--max-d must be at least 3")
    if args.command == "check" and args.count < 0:
        parser.error("--count must be non-negative")

    settings = get_settings()
    logging.basicConfig(
        level=settings.LOG_LEVEL.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    sentry_sdk.init(dsn=settings.SENTRY_DSN.get_secret_value())

    try:
        text, code = _execute(args)
    except MilnorHodgeException as error:
        if isinstance(error, ConsistencyError):
            sentry_sdk.capture_exception(error)
        logger.debug("Command %s failed", args.command, exc_info=True)
        sys.stderr.write(f"error: {error.message}\n")
        return error.exit_code.value
    sys.stdout.write(text)
    return code.value


def main() -> None:
    """Console script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
