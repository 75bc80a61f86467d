from functools import lru_cache

from shared.config import BaseSettings
from shared.config.base_settings import setup_logging


class Settings(BaseSettings):
    """Application settings."""

    # App settings
    APP_NAME: str = "lattice-path-matroids"
    APP_VERSION: str = "0.1.0"
    APP_DESCRIPTION: str = "Lattice path matroid presentations, minors, squares and brute-force oracles"

    # MCP settings
    MCP_ENABLED: bool = True


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings; environment values override the service defaults."""
    return Settings()


def setup_app_logging() -> None:
    """Set up application logging."""
    setup_logging(get_settings())
