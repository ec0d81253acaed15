"""Exact string rendering for integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def exact(value: int | Fraction) -> str:
    """Render ``value`` as a decimal string, or ``"p/q"`` for a proper rational."""

    if isinstance(value, bool):
        raise TypeError("booleans are not exact numbers")
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def digit_string(values: Iterable[int]) -> str:
    """Residues as one base-36 character each, the code-file row format."""

    return "".join(_DIGITS[int(value)] for value in values)


def parse_exact(text: str) -> Fraction:
    """Inverse of :func:`exact`."""

    return Fraction(text)


def exact_map(values: Mapping[int, int | Fraction]) -> dict[str, str]:
    return {str(key): exact(values[key]) for key in sorted(values)}


def exact_list(values: Iterable[int | Fraction]) -> list[str]:
    return [exact(value) for value in values]


__all__ = ["digit_string", "exact", "exact_list", "exact_map", "parse_exact"]
