"""Runtime configuration for analyses and the command line."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Any, Mapping

from dotenv import find_dotenv, load_dotenv

DEFAULT_BUDGET = 3**16
DEFAULT_T_MAX_PROBE = 7
DEFAULT_HARMONIC_MAX_DEGREE = 6
DEFAULT_HARMONIC_SIZE_CAP = 20_000

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def _read_int(source: Mapping[str, str], name: str, default: int) -> int:
    raw = source.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip())
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


@dataclass(slots=True, frozen=True)
class AnalysisSettings:
    """Budgets and caps shared by every analysis."""

    budget: int = DEFAULT_BUDGET
    t_max_probe: int = DEFAULT_T_MAX_PROBE
    harmonic_max_degree: int = DEFAULT_HARMONIC_MAX_DEGREE
    harmonic_size_cap: int = DEFAULT_HARMONIC_SIZE_CAP
    workers: int = 1
    log_level: str = "INFO"
    log_file: str | None = None

    def __post_init__(self) -> None:
        for name in ("budget", "t_max_probe", "harmonic_max_degree", "harmonic_size_cap", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.log_level.upper() not in _LOG_LEVELS:
            raise ValueError(f"Unsupported log level: {self.log_level}")

    @classmethod
    def from_env(
        cls,
        env: Mapping[str, str] | None = None,
        *,
        dotenv_path: str | None = None,
    ) -> "AnalysisSettings":
        """Build settings from ``AMDESIGNS_*`` environment variables.

        When ``env`` is omitted the process environment is used, after loading a
        ``.env`` file (``dotenv_path`` or the nearest one to the working directory)
        without overriding variables that are already set.
        """

        if env is None:
            path = dotenv_path or find_dotenv(usecwd=True)
            if path:
                load_dotenv(path, override=False)
            source: Mapping[str, str] = os.environ
        else:
            source = env
        log_file = source.get("AMDESIGNS_LOG_FILE") or None
        return cls(
            budget=_read_int(source, "AMDESIGNS_BUDGET", DEFAULT_BUDGET),
            t_max_probe=_read_int(source, "AMDESIGNS_T_MAX_PROBE", DEFAULT_T_MAX_PROBE),
            harmonic_max_degree=_read_int(
                source, "AMDESIGNS_HARMONIC_MAX_DEGREE", DEFAULT_HARMONIC_MAX_DEGREE
            ),
            harmonic_size_cap=_read_int(
                source, "AMDESIGNS_HARMONIC_SIZE_CAP", DEFAULT_HARMONIC_SIZE_CAP
            ),
            workers=_read_int(source, "AMDESIGNS_WORKERS", 1),
            log_level=(source.get("AMDESIGNS_LOG_LEVEL") or "INFO").upper(),
            log_file=log_file,
        )

    def with_overrides(self, **overrides: Any) -> "AnalysisSettings":
        """Return a copy with every non-``None`` override applied."""

        changes = {key: value for key, value in overrides.items() if value is not None}
        if "log_level" in changes:
            changes["log_level"] = str(changes["log_level"]).upper()
        return replace(self, **changes)


__all__ = [
    "AnalysisSettings",
    "DEFAULT_BUDGET",
    "DEFAULT_HARMONIC_MAX_DEGREE",
    "DEFAULT_HARMONIC_SIZE_CAP",
    "DEFAULT_T_MAX_PROBE",
]
