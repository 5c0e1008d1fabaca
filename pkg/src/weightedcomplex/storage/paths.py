"""Path management for sweep tables."""

from weightedcomplex.config import settings


def get_table_path(name: str) -> str:
    """
    Returns local filesystem path to a Parquet sweep table under the report directory.

    Args:
        name: Table name (without .parquet extension)

    Returns:
        Full local path to the Parquet file

    Example:
        >>> get_table_path("sweep_n5_grid")
        "/abs/path/reports/sweep_n5_grid.parquet"
    """
    return f"{settings.report_path}/{name}.parquet"
