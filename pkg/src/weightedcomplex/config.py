"""Configuration settings for the weightedcomplex verification engine."""

from pathlib import Path

from pydantic import computed_field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Blocks and subsets are fixed-width bit masks over [n].
GROUND_SET_LIMIT = 16

CAP_FIELDS = (
    "max_n",
    "ordered_partition_cap",
    "matching_cap",
    "homology_cap",
    "graded_check_cap",
    "el_labeling_cap",
    "shelling_cap",
    "pfaffian_max_order",
)


class Settings(BaseSettings):
    """Application configuration settings using Pydantic BaseSettings."""

    # Enumeration caps (ordered Bell / double factorial growth)
    max_n: int = GROUND_SET_LIMIT
    ordered_partition_cap: int = 10
    matching_cap: int = 14
    homology_cap: int = 6
    graded_check_cap: int = 10
    el_labeling_cap: int = 8
    shelling_cap: int = 6
    pfaffian_max_order: int = 16

    # Sweep configuration
    sweep_workers: int = 4  # Number of worker threads for sweeps
    default_seed: int = 0

    # Output
    report_dir: str = "reports"
    log_level: str = "INFO"

    @computed_field  # type: ignore[prop-decorator]
    @property
    def report_path(self) -> str:
        """Local base path for reports and sweep tables."""
        return str(Path(self.report_dir).resolve())

    @field_validator(*CAP_FIELDS)
    @classmethod
    def _ensure_cap_bounds(_cls, value: int) -> int:
        """Caps must be positive and never exceed the bit-mask width."""
        if value < 1:
            raise ValueError("caps must be at least 1")
        if value > GROUND_SET_LIMIT:
            raise ValueError(f"caps cannot exceed the ground-set limit {GROUND_SET_LIMIT}")
        return value

    @field_validator("sweep_workers")
    @classmethod
    def _ensure_worker_bounds(_cls, value: int) -> int:
        """Ensure sweep workers stays within safe bounds."""
        if value < 1:
            raise ValueError("sweep_workers must be at least 1")
        return value

    model_config = SettingsConfigDict(
        env_prefix="WEIGHTEDCOMPLEX_",
        env_file=".env",
        extra="ignore",
        validate_assignment=True,
    )


settings = Settings()
