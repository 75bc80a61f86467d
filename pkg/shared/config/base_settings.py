"""Base settings for all services."""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings as PydanticBaseSettings
from pydantic_settings import SettingsConfigDict


class BaseSettings(PydanticBaseSettings):
    """Base settings for all services."""

    model_config = SettingsConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # App settings
    APP_NAME: str = "base-service"
    APP_VERSION: str = "0.1.0"
    APP_DESCRIPTION: str = "Base service"

    # Server settings
    HOST: str = "0.0.0.0"
    PORT: int = 8000
    DEBUG: bool = False

    # Logging settings; WARNING keeps command-line output quiet
    LOG_LEVEL: str = Field(default="WARNING", description="Root log level")
    LOG_FILE: Optional[str] = Field(default=None, description="Optional rotating log file")
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@lru_cache()
def get_base_settings() -> BaseSettings:
    """Get cached base settings."""
    return BaseSettings()


def setup_logging(settings: Optional[BaseSettings] = None) -> None:
    """Set up application logging from settings."""
    from shared.logging import setup_logging as setup_app_logging

    if settings is None:
        settings = get_base_settings()

    if settings.LOG_FILE:
        Path(settings.LOG_FILE).parent.mkdir(parents=True, exist_ok=True)

    setup_app_logging(
        log_level=settings.LOG_LEVEL,
        log_file=settings.LOG_FILE,
        log_format=settings.LOG_FORMAT,
    )
