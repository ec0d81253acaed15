"""Diagnostics for the amdesigns command line.

Reports go to stdout; everything here goes through the ``amdesigns.cli``
logger to stderr, so ``--json`` output stays machine readable.
"""
from __future__ import annotations

import logging
from typing import Optional

from .config import get_logger, initialize_logging

logger = get_logger("cli")


def configure_logger(level: int | str = logging.INFO, *, log_file: Optional[str] = None) -> None:
    """Attach the package handlers at ``level`` (name or number), plus ``log_file`` if given."""
    name = logging.getLevelName(level) if isinstance(level, int) else level
    initialize_logging(log_level=name, log_file=log_file)


def log_info(message: str) -> None:
    logger.info(message)


def log_warning(message: str) -> None:
    logger.warning(message)


def log_error(message: str) -> None:
    """Errors and anomalies; the CLI pairs these with a nonzero exit code."""
    logger.error(message)
