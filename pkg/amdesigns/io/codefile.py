"""Generator-matrix files.

The text format is a header line ``q n k`` followed by ``k`` rows of ``n``
digits, one character per coordinate. Blank lines and lines starting with
``#`` are ignored. A JSON variant ``{"q": 3, "n": 4, "k": 1, "rows": ["1111"]}``
is accepted as well.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from pydantic import ValidationError

from ..algebra.field import Matrix, check_modulus, rank
from ..errors import BadDigit, FieldError, MalformedHeader, RankDeficient
from ..formatting import digit_string
from ..codes.golay import build_fixture
from ..codes.linear import LinearCode
from .schema import CodeFile, model_validate

CODE_FILE_SUFFIX = ".code"


def _parse_header(line: str, line_no: int) -> tuple[int, int, int]:
    parts = line.split()
    if len(parts) != 3 or not all(part.isdigit() for part in parts):
        raise MalformedHeader(f"line {line_no}: expected header 'q n k', got {line!r}")
    q, n, k = (int(part) for part in parts)
    try:
        check_modulus(q)
    except FieldError as exc:
        raise MalformedHeader(f"line {line_no}: {exc}") from exc
    if not 1 <= k <= n:
        raise MalformedHeader(f"line {line_no}: need 1 <= k <= n, got n = {n}, k = {k}")
    return q, n, k


def _parse_row(line: str, line_no: int, q: int, n: int) -> list[int]:
    if len(line) != n:
        raise MalformedHeader(f"line {line_no}: expected {n} digits, got {len(line)}")
    digits = []
    for col, char in enumerate(line, start=1):
        try:
            value = int(char, 36)
        except ValueError:
            raise BadDigit(line_no, col, char, q) from None
        if value >= q:
            raise BadDigit(line_no, col, char, q)
        digits.append(value)
    return digits


def _build(q: int, n: int, k: int, rows: list[list[int]], name: str | None) -> LinearCode:
    matrix = Matrix(rows, q, cols=n)
    found = rank(matrix)
    if found < k:
        raise RankDeficient(found, k)
    return LinearCode(matrix, name)


def _parse_json(text: str, name: str | None) -> LinearCode:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedHeader(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, Mapping):
        raise MalformedHeader("JSON code file must be an object")
    try:
        model = model_validate(CodeFile, raw)
    except ValidationError as exc:
        raise MalformedHeader(f"invalid JSON code file: {exc}") from exc
    q, n, k = _parse_header(f"{model.q} {model.n} {model.k}", 1)
    if len(model.rows) != k:
        raise MalformedHeader(f"expected {k} rows, got {len(model.rows)}")
    rows = [_parse_row(row, index, q, n) for index, row in enumerate(model.rows, start=1)]
    return _build(q, n, k, rows, name)


def parse_code_file(text: str, *, name: str | None = None) -> LinearCode:
    """Parse a code file; positions in errors are 1-based."""

    if text.lstrip().startswith("{"):
        return _parse_json(text, name)
    header: tuple[int, int, int] | None = None
    rows: list[list[int]] = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, line_no)
            continue
        q, n, k = header
        if len(rows) == k:
            raise MalformedHeader(f"line {line_no}: more than the {k} rows announced")
        rows.append(_parse_row(line, line_no, q, n))
    if header is None:
        raise MalformedHeader("missing header line 'q n k'")
    q, n, k = header
    if len(rows) != k:
        raise MalformedHeader(f"expected {k} rows, got {len(rows)}")
    return _build(q, n, k, rows, name)


def load_code_file(path: Path | str) -> LinearCode:
    target = Path(path)
    return parse_code_file(target.read_text(encoding="utf-8"), name=target.stem)


def render_code_file(code: LinearCode) -> str:
    """Text form of ``code``; the name, when present, becomes a comment line."""

    lines = [f"# {code.name}"] if code.name else []
    lines.append(f"{code.modulus} {code.n} {code.k}")
    lines.extend(digit_string(row) for row in code.generator.to_rows())
    return "\n".join(lines) + "\n"


def export_fixture(name: str, directory: Path | str) -> Path:
    """Write the built-in code ``name`` to ``directory/<name>.code``."""

    code = build_fixture(name)
    target = Path(directory) / f"{code.name}{CODE_FILE_SUFFIX}"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_code_file(code), encoding="utf-8")
    return target


__all__ = [
    "CODE_FILE_SUFFIX",
    "CodeFile",
    "export_fixture",
    "load_code_file",
    "parse_code_file",
    "render_code_file",
]
