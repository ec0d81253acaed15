"""Logging utilities for amdesigns."""
from .config import get_logger, initialize_logging
from .console import configure_logger, log_error, log_info, log_warning

__all__ = [
    "configure_logger",
    "get_logger",
    "initialize_logging",
    "log_error",
    "log_info",
    "log_warning",
]
