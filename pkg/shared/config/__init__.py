"""Shared configuration module."""

from shared.config.base_settings import BaseSettings, get_base_settings
from shared.config.search_settings import SearchSettings, get_search_settings

__all__ = ["BaseSettings", "get_base_settings", "SearchSettings", "get_search_settings"]
