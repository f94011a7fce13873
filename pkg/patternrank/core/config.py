"""
Application Configuration

This module handles process-wide configuration using Pydantic Settings.
Per-run extraction options live in ``RunConfig`` (see the CLI schemas); the
settings here cover the ambient concerns shared by every command: logging,
concurrency, embedding transport and telemetry.
"""

import logging

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings with environment variable support.

    Every field can be overridden with a ``PATTERNRANK_`` prefixed environment
    variable or a ``.env`` file in the working directory.

    Example:
        export PATTERNRANK_BACKEND="http:http://localhost:8080"
        export PATTERNRANK_WORKERS=8
        export PATTERNRANK_LOG_FORMAT=console
    """

    model_config = SettingsConfigDict(
        env_prefix="PATTERNRANK_", env_file=".env", extra="ignore"
    )

    # Application Settings
    APP_NAME: str = "patternrank"  # Used in log context
    APP_VERSION: str = "0.1.0"
    DEBUG: bool = False  # Adds callsite info to log entries
    TESTING: bool = False  # Automatically set during test runs

    # Logging Settings
    LOG_LEVEL: str = "INFO"  # DEBUG, INFO, WARNING, ERROR, CRITICAL
    LOG_FORMAT: str = "json"  # "json" for batch jobs, "console" for humans

    # Embedding Backend - fallback when --backend is not given
    BACKEND: str | None = None  # http:URL | stdio:CMD | precomputed:PATH | reference:DIM:SEED

    # Concurrency
    WORKERS: int = 4  # Documents processed concurrently
    EMBED_BATCH_SIZE: int = 64  # Texts per embedding request

    # External API Settings - HTTP embedding backend
    EXTERNAL_API_TIMEOUT: int = 30  # Request timeout in seconds
    EXTERNAL_API_RETRIES: int = 3  # Connection retry attempts
    HTTP_MAX_CHARS: int | None = 20000  # Document truncation hint

    # Telemetry
    METRICS_TEXTFILE: str | None = None  # Prometheus textfile written after a run
    OTLP_ENDPOINT: str | None = None  # Trace export is off unless set
    ENABLE_CONSOLE_TRACES: bool = False

    @field_validator("LOG_LEVEL", mode="after")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Reject level names the stdlib logging module does not know."""
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("WORKERS", "EMBED_BATCH_SIZE", mode="after")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Concurrency and batch size must be at least one."""
        if v < 1:
            raise ValueError("must be >= 1")
        return v

    @property
    def is_testing(self) -> bool:
        """Check if running in testing mode."""
        return self.TESTING


# Global settings instance - singleton pattern for configuration
_settings: Settings | None = None


def get_settings() -> Settings:
    """
    Get application settings singleton instance.

    Returns:
        Settings: configuration loaded once from the environment

    Example:
        from patternrank.core.config import get_settings

        settings = get_settings()
        print(settings.WORKERS)
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached singleton so the next call re-reads the environment."""
    global _settings
    _settings = None
