"""Configuration management for the matrix-product code workbench.

Uses Pydantic Settings so every scan cap and the global seed can be set
from the environment (or a ``.env`` file) without touching code.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Workbench settings loaded from environment variables.

    Example:
        settings = get_settings()
        print(settings.distance_cap)
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,
    )

    # Enumeration caps
    distance_cap: int = Field(
        2**24,
        description="Maximum codewords enumerated by min_distance",
        ge=1,
        alias="MPCODES_DISTANCE_CAP",
    )

    oracle_cap: int = Field(
        2**20,
        description="Maximum vectors enumerated per brute-force oracle scan",
        ge=1,
        alias="MPCODES_ORACLE_CAP",
    )

    matrix_scan_cap: int = Field(
        2**20,
        description="Maximum matrices visited by an exhaustive defining-matrix scan",
        ge=1,
        alias="MPCODES_MATRIX_SCAN_CAP",
    )

    code_scan_cap: int = Field(
        2**12,
        description="Maximum codes in an 'all codes' search pool",
        ge=1,
        alias="MPCODES_CODE_SCAN_CAP",
    )

    # Randomness
    seed: int = Field(
        0,
        description="Seed for every randomized pool and trial corpus",
        ge=0,
        alias="MPCODES_SEED",
    )

    verify_trials: int = Field(
        500,
        description="Random trials per randomized property of the verify suite",
        ge=1,
        le=100_000,
        alias="MPCODES_VERIFY_TRIALS",
    )

    # Logging Configuration
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        "WARNING", description="Logging level", alias="MPCODES_LOG_LEVEL"
    )

    log_format: Literal["json", "text"] = Field(
        "json", description="Log output format", alias="MPCODES_LOG_FORMAT"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept log levels in any case."""
        if isinstance(v, str):
            return v.strip().upper()
        return v

    @property
    def json_logs(self) -> bool:
        """True when logs are rendered as JSON."""
        return self.log_format == "json"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance.

    Returns:
        Settings instance with all configuration values
    """
    return Settings()


def reload_settings() -> Settings:
    """Force reload settings from environment.

    Clears the cache and returns new settings.

    Returns:
        Fresh Settings instance
    """
    get_settings.cache_clear()
    return get_settings()
