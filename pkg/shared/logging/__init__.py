"""Shared logging module."""

from shared.logging.logger import get_logger, log_duration, setup_logging

__all__ = ["get_logger", "log_duration", "setup_logging"]
