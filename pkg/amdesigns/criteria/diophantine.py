"""Exhaustive scan of ``Σ_{i=0}^{ℓ} C(n,i)(q−1)^i = q^k`` in exact integers."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from sympy import factorint

from ..formatting import exact
from ..logging.config import get_logger

LOGGER = get_logger("amdesigns.criteria")


def sphere_sum(n: int, ell: int, q: int) -> int:
    """Number of words within Hamming distance ``ell`` of a point in ``GF(q)^n``."""

    return sum(comb(n, i) * (q - 1) ** i for i in range(ell + 1))


def exact_power(value: int, base: int) -> int | None:
    """``k`` with ``base^k = value``, or ``None``."""

    if value < 1:
        return None
    exponent = 0
    while value % base == 0:
        value //= base
        exponent += 1
    return exponent if value == 1 else None


def check_prime_power(q: int) -> int:
    if q < 2 or len(factorint(q)) != 1:
        raise ValueError(f"q must be a prime power, got {q}")
    return q


@dataclass(frozen=True, slots=True)
class DiophantineSolution:
    n: int
    k: int
    value: int

    def to_dict(self) -> dict:
        return {"n": exact(self.n), "k": exact(self.k), "value": exact(self.value)}


def diophantine_scan(q: int, ell: int, n_max: int) -> list[DiophantineSolution]:
    """Every ``1 ≤ n ≤ n_max`` whose sphere sum is an exact power of ``q``.

    Solutions with ``n ≤ ℓ`` are the whole space and always appear.
    """

    check_prime_power(q)
    if ell < 1:
        raise ValueError(f"ell must be at least 1, got {ell}")
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    solutions = []
    for n in range(1, n_max + 1):
        value = sphere_sum(n, ell, q)
        k = exact_power(value, q)
        if k is not None:
            solutions.append(DiophantineSolution(n, k, value))
    LOGGER.info(
        "q = %s, ell = %s, n <= %s: %s solutions", q, ell, n_max, len(solutions)
    )
    return solutions


__all__ = [
    "DiophantineSolution",
    "check_prime_power",
    "diophantine_scan",
    "exact_power",
    "sphere_sum",
]
