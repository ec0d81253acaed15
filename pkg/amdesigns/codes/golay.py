"""Ternary Golay codes built from quadratic residues modulo 11.

The cyclic shifts of the indicator vector of the nonzero squares mod 11 span
the [11,6,5] ternary Golay code. Appending a zero-sum coordinate yields the
self-dual [12,6,6] code, and the dual of the former is the [11,5,6]
two-weight code. Every construction checks its own parameters.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

from ..algebra.field import Matrix
from ..errors import CodeError
from .linear import LinearCode, dual, extend_with_parity, weight_distribution

GOLAY_LENGTH = 11
GOLAY_MODULUS = 3


def quadratic_residues(prime: int) -> tuple[int, ...]:
    """Nonzero squares modulo ``prime`` in increasing order."""

    return tuple(sorted({(x * x) % prime for x in range(1, prime)}))


def _verify(code: LinearCode, n: int, k: int, d: int) -> LinearCode:
    found = (code.n, code.k, weight_distribution(code).minimum_distance)
    if found != (n, k, d):
        raise CodeError(f"{code.label} has parameters {list(found)}, expected [{n},{k},{d}]")
    return code


@lru_cache(maxsize=None)
def construct_golay() -> LinearCode:
    """The [11,6,5] ternary Golay code."""

    indicator = np.zeros(GOLAY_LENGTH, dtype=np.int64)
    indicator[list(quadratic_residues(GOLAY_LENGTH))] = 1
    shifts = np.stack([np.roll(indicator, shift) for shift in range(GOLAY_LENGTH)])
    code = LinearCode(Matrix(shifts, GOLAY_MODULUS), "golay11")
    return _verify(code, 11, 6, 5)


@lru_cache(maxsize=None)
def construct_extended_golay() -> LinearCode:
    """The self-dual [12,6,6] extended ternary Golay code."""

    return _verify(extend_with_parity(construct_golay(), name="golay12"), 12, 6, 6)


@lru_cache(maxsize=None)
def construct_dual_golay() -> LinearCode:
    """The [11,5,6] dual of the ternary Golay code."""

    code = LinearCode(dual(construct_golay()).generator, "golay11dual")
    return _verify(code, 11, 5, 6)


_FIXTURE_BUILDERS: dict[str, Callable[[], LinearCode]] = {
    "golay11": construct_golay,
    "golay11dual": construct_dual_golay,
    "golay12": construct_extended_golay,
}


def list_available_fixtures() -> list[str]:
    """Return identifiers of the built-in codes."""

    return sorted(_FIXTURE_BUILDERS)


def build_fixture(name: str) -> LinearCode:
    """Build the built-in code registered under ``name``."""

    if not name:
        raise ValueError("fixture name must be provided")
    builder = _FIXTURE_BUILDERS.get(name.strip().lower())
    if builder is None:
        available = ", ".join(sorted(_FIXTURE_BUILDERS))
        raise ValueError(f"Unknown fixture: {name}. Available fixtures: {available}")
    return builder()


__all__ = [
    "build_fixture",
    "construct_dual_golay",
    "construct_extended_golay",
    "construct_golay",
    "list_available_fixtures",
    "quadratic_residues",
]
