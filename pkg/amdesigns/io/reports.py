"""Versioned report envelope with JSON and Markdown renderings.

Payloads hold only strings, booleans, ``None``, lists and string-keyed
mappings. Exact numbers are carried as decimal or ``"p/q"`` strings, so both
renderings show identical numeric content and JSON consumers never coerce
them to floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from pydantic import ValidationError

from ..errors import ReportFormatError
from .schema import ReportEnvelope, model_validate

SCHEMA = "am-designs/1"


def _normalize(value: Any, path: str) -> Any:
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, float)):
        raise ReportFormatError(f"{path}: numbers must be exact strings, got {value!r}")
    if isinstance(value, Mapping):
        normalized = {}
        for key, item in value.items():
            if not isinstance(key, str):
                raise ReportFormatError(f"{path}: keys must be strings, got {key!r}")
            normalized[key] = _normalize(item, f"{path}.{key}")
        return normalized
    if isinstance(value, (list, tuple)):
        return [_normalize(item, f"{path}[{index}]") for index, item in enumerate(value)]
    raise ReportFormatError(f"{path}: unsupported value of type {type(value).__name__}")


@dataclass(slots=True)
class Report:
    kind: str
    payload: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.payload = _normalize(self.payload, self.kind)


def render_json(report: Report, *, indent: int = 2) -> str:
    envelope = {"schema": SCHEMA, "kind": report.kind, "payload": report.payload}
    return json.dumps(envelope, indent=indent, ensure_ascii=False)


def parse_json(text: str) -> Report:
    """Inverse of :func:`render_json`."""

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, Mapping):
        raise ReportFormatError("report must be a JSON object")
    try:
        envelope = model_validate(ReportEnvelope, raw)
    except ValidationError as exc:
        raise ReportFormatError(f"invalid report envelope: {exc}") from exc
    if envelope.schema_tag != SCHEMA:
        raise ReportFormatError(f"unsupported schema {envelope.schema_tag!r}, expected {SCHEMA!r}")
    return Report(envelope.kind, dict(envelope.payload))


def _render_value(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _render_items(lines: list[str], value: Any, depth: int) -> None:
    indent = "  " * depth
    if isinstance(value, Mapping):
        for key, item in value.items():
            if isinstance(item, (Mapping, list)) and item:
                lines.append(f"{indent}- {key}:")
                _render_items(lines, item, depth + 1)
            else:
                lines.append(f"{indent}- {key}: {_render_value(item)}")
    else:
        for index, item in enumerate(value):
            if isinstance(item, (Mapping, list)) and item:
                lines.append(f"{indent}- [{index}]")
                _render_items(lines, item, depth + 1)
            else:
                lines.append(f"{indent}- {_render_value(item)}")


def render_markdown(report: Report) -> str:
    lines = [f"# {report.kind}", ""]
    _render_items(lines, report.payload, 0)
    return "\n".join(lines)


__all__ = [
    "Report",
    "ReportEnvelope",
    "SCHEMA",
    "parse_json",
    "render_json",
    "render_markdown",
]
