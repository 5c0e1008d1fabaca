"""Command-line surface: argparse entry point, subcommands and report rendering. 🖥️"""

from weightedcomplex.cli.commands import ORDER_SOURCES, cmd_complex, cmd_compute, cmd_shell
from weightedcomplex.cli.serialization import complex_from_payload, complex_to_payload
from weightedcomplex.cli.sweep import DEFAULT_SUITES, SUITES, cmd_sweep

__all__ = [
    "ORDER_SOURCES",
    "DEFAULT_SUITES",
    "SUITES",
    "cmd_compute",
    "cmd_complex",
    "cmd_shell",
    "cmd_sweep",
    "complex_to_payload",
    "complex_from_payload",
]
