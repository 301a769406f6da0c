"""
Configuration module for clique-powers.
"""

import sys
from pathlib import Path

from loguru import logger
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

PACKAGE_LOGGER = "clique_powers"


class Settings(BaseSettings):
    """Настройки с поддержкой переменных окружения (префикс CLIQUE_POWERS_)."""

    model_config = SettingsConfigDict(
        env_prefix="CLIQUE_POWERS_", env_file=".env", env_file_encoding="utf-8", case_sensitive=False
    )

    # Resource guards
    face_limit: int = Field(default=10_000_000, gt=0, description="Global face-count ceiling for complexes")
    exact_face_limit: int = Field(
        default=200_000, gt=0, description="Complexes up to this many faces get full Smith normal form"
    )
    exact_table_max_n: int = Field(default=20, ge=3, description="Largest cycle length tabulated with exact homology")
    induced_search_cap: int = Field(default=8, ge=1, description="Largest pattern graph for induced-subgraph search")

    # Homology
    torsion_primes: list[int] = Field(default=[2, 3, 5], description="Primes used for H1 surjectivity over finite fields")

    # Suite runner
    max_concurrent: int = Field(default=1, ge=1, description="Number of reports computed concurrently")

    # Output directories
    results_dir: str = Field(default="results", description="Directory for saved reports")
    logs_dir: str | None = Field(default=None, description="Directory for a rotating log file (disabled when unset)")

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level for the CLI")
    log_format: str = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function}:{line} - {message}"


def setup_logging(level: str | None = None, config: Settings | None = None) -> None:
    """Configure loguru sinks for command-line use."""
    config = config or settings
    logger.remove()
    logger.enable(PACKAGE_LOGGER)
    logger.add(sys.stderr, level=(level or config.log_level).upper(), format=config.log_format)

    if config.logs_dir:
        logs_dir = Path(config.logs_dir)
        logs_dir.mkdir(parents=True, exist_ok=True)
        logger.add(
            logs_dir / "clique_powers.log",
            level="DEBUG",
            format=config.log_format,
            rotation="10 MB",
            retention="7 days",
        )


# Глобальный объект настроек
settings = Settings()
