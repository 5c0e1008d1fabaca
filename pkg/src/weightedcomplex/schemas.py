"""Report models (pydantic) and the sweep table schema (polars) for weightedcomplex."""

from typing import Any, Literal

import polars as pl
from pydantic import BaseModel, ConfigDict, Field, field_validator

SCHEMA_VERSION = "1.0"

# Exact values only: integers or "p/q" strings, nested in lists/dicts.
JsonValue = Any


# =============================================================================
# JSON reports
# =============================================================================


class Check(BaseModel):
    """One named comparison in a report."""

    model_config = ConfigDict(populate_by_name=True)

    name: str
    expected: JsonValue
    actual: JsonValue
    passed: bool = Field(alias="pass")


class JsonReport(BaseModel):
    """Top-level report written by every subcommand."""

    schema_version: str = SCHEMA_VERSION
    command: str
    inputs: dict[str, JsonValue]
    results: dict[str, JsonValue]
    checks: list[Check] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class ErrorDetail(BaseModel):
    type: str
    message: str


class ErrorReport(BaseModel):
    """Machine-readable error object for usage, parse and cap failures."""

    schema_version: str = SCHEMA_VERSION
    command: str
    error: ErrorDetail


class RunConfig(BaseModel):
    """Per-run options: identical (command, config, seed) gives identical output."""

    seed: int = 0
    caps: dict[str, int] = Field(default_factory=dict)
    output_path: str | None = None
    format: Literal["json", "text"] = "json"

    @field_validator("seed")
    @classmethod
    def _ensure_seed_bounds(_cls, value: int) -> int:
        """Seeds are unsigned 64-bit integers."""
        if not 0 <= value < 2**64:
            raise ValueError("seed must be in [0, 2^64)")
        return value


# =============================================================================
# Sweep tables
# =============================================================================

SWEEP_CASE_SCHEMA: dict[str, Any] = {
    "case": pl.UInt32,
    "suite": pl.Utf8,
    "n": pl.UInt8,
    "weights": pl.Utf8,
    "s_value": pl.Int64,
    "t_value": pl.Int64,
    "passed": pl.Boolean,
    "detail": pl.Utf8,
}

SWEEP_SUMMARY_SCHEMA: dict[str, Any] = {
    "suite": pl.Utf8,
    "cases": pl.UInt32,
    "failures": pl.UInt32,
}
