"""Command-line entry point: compute | complex | shell | sweep. 🖥️

JSON goes to stdout (or --out), logs and progress to stderr. Exit codes:
0 when every check passes, 1 when checks ran and failed or a decomposition
did not tile, 2 on usage, parse or cap errors.
"""

import argparse
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence

from weightedcomplex.cli.commands import ORDER_SOURCES, cmd_complex, cmd_compute, cmd_shell
from weightedcomplex.cli.serialization import (
    dump_report,
    error_report,
    parse_caps,
    parse_weights,
    render_text,
)
from weightedcomplex.cli.sweep import DEFAULT_SUITES, SUITES, cmd_sweep
from weightedcomplex.config import settings
from weightedcomplex.errors import DecompositionError
from weightedcomplex.identities.engine import ROUTES
from weightedcomplex.logging_config import get_logger, setup_logging
from weightedcomplex.schemas import ErrorReport, JsonReport, RunConfig
from weightedcomplex.storage import get_table_path, write_report, write_table
from weightedcomplex.weighted.weights import parse_fraction

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Options whose values may start with "-" (negative weights).
_VALUE_OPTIONS = ("--lambda", "--grid")


class UsageError(ValueError):
    """Raised instead of argparse's own exit on bad command lines."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--lambda -1,2`` into ``--lambda=-1,2`` so argparse keeps the value."""
    joined: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in _VALUE_OPTIONS:
            value = next(tokens, None)
            if value is None:
                joined.append(token)
            else:
                joined.append(f"{token}={value}")
        else:
            joined.append(token)
    return joined


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="Write the report to this file instead of stdout.")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument(
        "--cap",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Override a size cap for this run (repeatable).",
    )
    common.add_argument("--seed", type=int, default=settings.default_seed)

    parser = _Parser(
        prog="weightedcomplex",
        description="Verify the weighted Coxeter complex Σ(λ), its shellings and the S/T identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", parents=[common], help="S(λ) and T(λ) by the requested routes.")
    compute.add_argument("--lambda", dest="weights", required=True)
    compute.add_argument("routes", nargs="*", metavar="ROUTE", help=f"Any of {', '.join(ROUTES)}.")
    compute.add_argument("--all", action="store_true", help="Every route.")

    complex_ = sub.add_parser("complex", parents=[common], help="Build Σ(λ) and report its topology.")
    complex_.add_argument("--lambda", dest="weights", required=True)
    complex_.add_argument("--export", action="store_true", help="Include every face.")

    shell = sub.add_parser("shell", parents=[common], help="Check a facet order for shellability.")
    shell.add_argument("--lambda", dest="weights", required=True)
    shell.add_argument("--order-source", choices=ORDER_SOURCES, default="linear-extension")
    shell.add_argument("--order-file")
    shell.add_argument("--samples", type=int, default=1)

    sweep = sub.add_parser("sweep", parents=[common], help="Run the invariant suites over many λ.")
    sweep.add_argument("--n", type=int, required=True)
    population = sweep.add_mutually_exclusive_group(required=True)
    population.add_argument("--grid", help="Comma-separated values; every λ in values^n.")
    population.add_argument("--random", type=int, help="Number of seeded random λ.")
    sweep.add_argument(
        "--suite",
        action="append",
        choices=SUITES,
        help=f"Repeatable; default {', '.join(DEFAULT_SUITES)}.",
    )
    sweep.add_argument("--workers", type=int)
    sweep.add_argument("--table-out", help="Write the case table as Parquet.")
    sweep.add_argument("--save-table", action="store_true", help="Write the case table under report_dir.")
    return parser


@contextmanager
def cap_overrides(caps: dict[str, int]) -> Iterator[None]:
    """Apply cap overrides to the live settings for the duration of one run."""
    previous = {key: getattr(settings, key) for key in caps}
    try:
        for key, value in caps.items():
            setattr(settings, key, value)
        yield
    finally:
        for key, value in previous.items():
            setattr(settings, key, value)


def _dispatch(args: argparse.Namespace, config: RunConfig) -> JsonReport:
    if args.command == "compute":
        routes = ROUTES if args.all or not args.routes else args.routes
        return cmd_compute(parse_weights(args.weights), routes)
    if args.command == "complex":
        return cmd_complex(parse_weights(args.weights), export=args.export)
    if args.command == "shell":
        return cmd_shell(
            parse_weights(args.weights),
            source=args.order_source,
            order_file=args.order_file,
            seed=config.seed,
            samples=args.samples,
        )

    grid = [parse_fraction(v) for v in args.grid.split(",")] if args.grid is not None else None
    report, table = cmd_sweep(
        args.n,
        grid=grid,
        random_count=args.random,
        seed=config.seed,
        suites=args.suite or DEFAULT_SUITES,
        workers=args.workers,
    )
    if args.table_out:
        write_table(args.table_out, table)
    if args.save_table:
        label = f"grid{len(grid)}" if grid is not None else f"random{args.random}_seed{config.seed}"
        write_table(get_table_path(f"sweep_n{args.n}_{label}"), table)
    return report


def _emit(report: JsonReport | ErrorReport, config: RunConfig | None) -> None:
    text = render_text(report) if config and config.format == "text" else dump_report(report) + "\n"
    if config and config.output_path:
        write_report(config.output_path, text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse `argv`, run one subcommand and write its report.

    Returns:
        The process exit code.
    """
    setup_logging(settings.log_level)
    raw = list(sys.argv[1:] if argv is None else argv)
    command = next((t for t in raw if t in ("compute", "complex", "shell", "sweep")), "weightedcomplex")
    config: RunConfig | None = None
    try:
        args = build_parser().parse_args(_join_negative_values(raw))
        config = RunConfig(
            seed=args.seed,
            caps=parse_caps(args.cap),
            output_path=args.out,
            format=args.format,
        )
        with cap_overrides(config.caps):
            report = _dispatch(args, config)
    except ValueError as exc:
        logger.error(f"❌ {command}: {exc}")
        _emit(error_report(command, exc), config)
        return EXIT_USAGE
    except DecompositionError as exc:
        logger.error(f"❌ {command}: {exc}")
        _emit(error_report(command, exc), config)
        return EXIT_FAILED

    _emit(report, config)
    if report.passed:
        logger.info(f"✅ {command}: all {len(report.checks)} checks passed")
        return EXIT_OK
    logger.warning(f"⚠️  {command}: some checks failed")
    return EXIT_FAILED


def cli() -> None:  # pragma: no cover
    """CLI entry point for the weightedcomplex command."""
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    cli()
