"""Code files and report rendering."""

from .codefile import export_fixture, load_code_file, parse_code_file, render_code_file
from .reports import SCHEMA, Report, parse_json, render_json, render_markdown
from .schema import CodeFile, ReportEnvelope

__all__ = [
    "CodeFile",
    "Report",
    "ReportEnvelope",
    "SCHEMA",
    "export_fixture",
    "load_code_file",
    "parse_code_file",
    "parse_json",
    "render_code_file",
    "render_json",
    "render_markdown",
]
