"""Report and Parquet table writing on the local filesystem."""

import logging
from pathlib import Path

import polars as pl

logger = logging.getLogger(__name__)


def write_table(table_path: str, df: pl.DataFrame) -> None:
    """
    Write a Polars DataFrame to a single Parquet file.

    Args:
        table_path: Local filesystem path of the Parquet file
        df: Polars DataFrame to write

    Example:
        >>> df = pl.DataFrame({"case": [0], "suite": ["main"], "passed": [True]})
        >>> write_table("reports/sweep_n5.parquet", df)
    """
    try:
        # Ensure parent directory exists
        Path(table_path).parent.mkdir(parents=True, exist_ok=True)
        df.write_parquet(table_path, compression="zstd")
        logger.debug(f"✅ Wrote {len(df)} rows to {table_path}")
    except Exception as e:
        logger.error(f"❌ Failed to write to {table_path}: {e}")
        raise


def read_table(table_path: str) -> pl.DataFrame:
    """
    Read a Parquet file into a Polars DataFrame.

    Args:
        table_path: Local filesystem path of the Parquet file

    Returns:
        Polars DataFrame with all table data
    """
    try:
        df = pl.read_parquet(table_path)
        logger.debug(f"📖 Read {len(df)} rows from {table_path}")
        return df
    except Exception as e:
        logger.error(f"❌ Failed to read from {table_path}: {e}")
        raise


def write_report(report_path: str, text: str) -> None:
    """
    Write a rendered report (JSON or text) to disk, creating parent directories.

    Args:
        report_path: Local filesystem path of the report file
        text: Fully rendered report body
    """
    try:
        path = Path(report_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.debug(f"✅ Wrote report to {report_path}")
    except Exception as e:
        logger.error(f"❌ Failed to write report {report_path}: {e}")
        raise
