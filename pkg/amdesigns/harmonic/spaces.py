"""Discrete harmonic functions on k-subsets.

``Harm_k`` is the kernel of the down operator that sends a function on
k-subsets to the function on (k−1)-subsets summing it over supersets. Bases
are computed by exact rational elimination on the sparse inclusion matrix,
with subsets indexed in colexicographic order, and every basis vector is
scaled to a primitive integer vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd, lcm
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import SizeCapExceeded
from ..logging.config import get_logger
from ..settings import DEFAULT_HARMONIC_MAX_DEGREE, DEFAULT_HARMONIC_SIZE_CAP

LOGGER = get_logger("amdesigns.harmonic")

Subset = tuple[int, ...]


@lru_cache(maxsize=None)
def colex_subsets(n: int, k: int) -> tuple[Subset, ...]:
    """All k-subsets of ``1..n`` in colexicographic order."""

    return tuple(sorted(combinations(range(1, n + 1), k), key=lambda subset: subset[::-1]))


@lru_cache(maxsize=None)
def subset_index(n: int, k: int) -> dict[Subset, int]:
    return {subset: index for index, subset in enumerate(colex_subsets(n, k))}


@dataclass(frozen=True, slots=True)
class HarmonicFunction:
    """Exact function on the k-subsets of ``1..n`` (colex order)."""

    n: int
    k: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != comb(self.n, self.k):
            raise ValueError(
                f"expected {comb(self.n, self.k)} values for k = {self.k}, got {len(self.values)}"
            )

    def __call__(self, subset: Sequence[int]) -> Fraction:
        return self.values[subset_index(self.n, self.k)[tuple(sorted(subset))]]

    def lifted(self, support: Sequence[int]) -> Fraction:
        """``f̃(S) = Σ_{T ⊆ S, |T| = k} f(T)``."""

        index = subset_index(self.n, self.k)
        return sum(
            (self.values[index[subset]] for subset in combinations(sorted(support), self.k)),
            Fraction(0),
        )

    def down(self) -> dict[Subset, Fraction]:
        """Image under the down operator, keyed by (k−1)-subset."""

        image = {subset: Fraction(0) for subset in colex_subsets(self.n, self.k - 1)}
        for subset, value in zip(colex_subsets(self.n, self.k), self.values):
            if value:
                for smaller in combinations(subset, self.k - 1):
                    image[smaller] += value
        return image

    def is_harmonic(self) -> bool:
        return not any(self.down().values())

    def dot(self, vector: Sequence[int]) -> Fraction:
        return sum((value * count for value, count in zip(self.values, vector) if count), Fraction(0))


def check_harmonic_size(
    n: int,
    k: int,
    *,
    max_degree: int = DEFAULT_HARMONIC_MAX_DEGREE,
    size_cap: int = DEFAULT_HARMONIC_SIZE_CAP,
) -> None:
    if k > max_degree:
        raise SizeCapExceeded(f"degree {k} exceeds the harmonic degree cap {max_degree}")
    if comb(n, k) > size_cap:
        raise SizeCapExceeded(f"C({n},{k}) = {comb(n, k)} exceeds the harmonic size cap {size_cap}")


def down_operator(n: int, k: int) -> DomainMatrix:
    """Sparse ``C(n,k−1) × C(n,k)`` inclusion matrix over QQ."""

    row_index = subset_index(n, k - 1)
    rows: dict[int, dict[int, object]] = {}
    for col, subset in enumerate(colex_subsets(n, k)):
        for smaller in combinations(subset, k - 1):
            rows.setdefault(row_index[smaller], {})[col] = QQ(1)
    return DomainMatrix(rows, (comb(n, k - 1), comb(n, k)), QQ)


def _to_fraction(value: object) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _primitive(vector: list[Fraction]) -> tuple[Fraction, ...]:
    scale = lcm(*(value.denominator for value in vector))
    integers = [int(value * scale) for value in vector]
    divisor = gcd(*integers)
    return tuple(Fraction(value // divisor) for value in integers)


@lru_cache(maxsize=None)
def _kernel(n: int, k: int) -> tuple[tuple[Fraction, ...], ...]:
    reduced, pivots = down_operator(n, k).rref()
    entries: dict[int, dict[int, Fraction]] = {
        row: {col: _to_fraction(value) for col, value in cols.items()}
        for row, cols in reduced.to_sparse().rep.items()
    }
    size = comb(n, k)
    pivot_set = set(pivots)
    basis = []
    for free in range(size):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * size
        vector[free] = Fraction(1)
        for row, pivot in enumerate(pivots):
            value = entries.get(row, {}).get(free)
            if value:
                vector[pivot] = -value
        basis.append(_primitive(vector))
    LOGGER.debug("Harm_%s on %s points has dimension %s", k, n, len(basis))
    return tuple(basis)


def harm_basis(
    n: int,
    k: int,
    *,
    max_degree: int = DEFAULT_HARMONIC_MAX_DEGREE,
    size_cap: int = DEFAULT_HARMONIC_SIZE_CAP,
) -> list[HarmonicFunction]:
    """A basis of ``Harm_k``; its size is ``C(n,k) − C(n,k−1)``."""

    if k < 1 or 2 * k > n:
        raise ValueError(f"harmonic degree must satisfy 1 <= k <= n/2, got n = {n}, k = {k}")
    check_harmonic_size(n, k, max_degree=max_degree, size_cap=size_cap)
    return [HarmonicFunction(n, k, values) for values in _kernel(n, k)]


__all__ = [
    "HarmonicFunction",
    "Subset",
    "check_harmonic_size",
    "colex_subsets",
    "down_operator",
    "harm_basis",
    "subset_index",
]
