"""dictConfig setup for the ``amdesigns`` logger tree.

Library modules log under ``amdesigns.<subsystem>`` (``codes``, ``designs``,
``am``, ``harmonic``, ``criteria``, ``cli``). Only the package logger receives
handlers; the root logger is left alone. This module is the single place
where handlers are attached.
"""
from __future__ import annotations

import logging
import logging.config
import sys
from pathlib import Path
from typing import Any, Optional, TextIO

PACKAGE_LOGGER = "amdesigns"
REPORT_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
REPORT_DATE_FORMAT = "%Y-%m-%dT%H:%M:%S%z"
LOG_FILE_BYTES = 5 * 1024 * 1024
LOG_FILE_BACKUPS = 5


class StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is at emit time."""

    def __init__(self) -> None:
        super().__init__(sys.stderr)

    @property
    def stream(self) -> TextIO:  # type: ignore[override]
        return sys.stderr

    @stream.setter
    def stream(self, value: TextIO) -> None:
        pass


def _handlers(log_file: Optional[str]) -> dict[str, dict[str, Any]]:
    handlers: dict[str, dict[str, Any]] = {
        "stderr": {"()": StderrHandler, "formatter": "report"},
    }
    if log_file:
        handlers["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "formatter": "report",
            "filename": str(log_file),
            "maxBytes": LOG_FILE_BYTES,
            "backupCount": LOG_FILE_BACKUPS,
            "encoding": "utf-8",
        }
    return handlers


def logging_config(log_level: str = "INFO", log_file: Optional[str] = None) -> dict[str, Any]:
    """The dictConfig mapping: stderr always, a rotating file when ``log_file`` is set."""
    handlers = _handlers(log_file)
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "report": {"format": REPORT_FORMAT, "datefmt": REPORT_DATE_FORMAT},
        },
        "handlers": handlers,
        "loggers": {
            PACKAGE_LOGGER: {
                "level": log_level.upper(),
                "handlers": list(handlers),
                "propagate": True,
            }
        },
    }


def initialize_logging(*, log_level: str = "INFO", log_file: Optional[str] = None) -> None:
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
    logging.config.dictConfig(logging_config(log_level, log_file))


def get_logger(name: str) -> logging.Logger:
    """Logger inside the package tree; ``"codes"`` resolves to ``"amdesigns.codes"``."""
    if name != PACKAGE_LOGGER and not name.startswith(PACKAGE_LOGGER + "."):
        name = f"{PACKAGE_LOGGER}.{name}"
    return logging.getLogger(name)


__all__ = [
    "PACKAGE_LOGGER",
    "StderrHandler",
    "get_logger",
    "initialize_logging",
    "logging_config",
]
