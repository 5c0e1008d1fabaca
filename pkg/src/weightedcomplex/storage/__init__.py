"""Storage layer for reports and Parquet tables on the local filesystem."""

from weightedcomplex.storage.operations import read_table, write_report, write_table
from weightedcomplex.storage.paths import get_table_path

__all__ = [
    # Paths
    "get_table_path",
    # Operations
    "write_table",
    "read_table",
    "write_report",
]
