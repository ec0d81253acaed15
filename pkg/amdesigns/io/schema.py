"""Pydantic models for the JSON code-file variant and the report envelope."""

from __future__ import annotations

from typing import Any, Dict, List, Mapping

from pydantic import BaseModel, Field


def model_validate(model: type[BaseModel], data: Mapping[str, Any]) -> BaseModel:
    """Return a pydantic model instance for ``data`` across major versions."""

    try:  # Pydantic v2
        return model.model_validate(data)  # type: ignore[attr-defined]
    except AttributeError:  # pragma: no cover - v1 fallback
        return model.parse_obj(data)  # type: ignore[call-arg]


class CodeFile(BaseModel):
    """JSON form of a generator matrix."""

    q: int
    n: int
    k: int
    rows: List[str]


class ReportEnvelope(BaseModel):
    """Top-level JSON object of every report."""

    schema_tag: str = Field(..., alias="schema")
    kind: str
    payload: Dict[str, Any]


__all__ = ["CodeFile", "ReportEnvelope", "model_validate"]
