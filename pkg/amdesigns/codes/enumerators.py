"""Weight distributions, homogeneous weight enumerators and the MacWilliams transform."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import sympy
from sympy import Poly

from ..algebra.field import check_modulus
from ..errors import CodeError, NonIntegerCoefficient
from ..formatting import exact, exact_map

X, Y = sympy.symbols("x y")


@dataclass(frozen=True, slots=True)
class WeightDistribution:
    """Exact number of codewords of each Hamming weight."""

    length: int
    modulus: int
    dimension: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {int(u): int(a) for u, a in sorted(self.counts.items()) if int(a) != 0}
        if any(u < 0 or u > self.length for u in cleaned):
            raise CodeError(f"weights must lie in [0, {self.length}]")
        if any(a < 0 for a in cleaned.values()):
            raise CodeError("weight counts must be nonnegative")
        if cleaned.get(0) != 1:
            raise CodeError(f"A_0 must be 1, got {cleaned.get(0, 0)}")
        expected = self.modulus**self.dimension
        if sum(cleaned.values()) != expected:
            raise CodeError(
                f"weight counts sum to {sum(cleaned.values())}, expected {self.modulus}^{self.dimension} = {expected}"
            )
        object.__setattr__(self, "counts", cleaned)

    def __getitem__(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> tuple[int, ...]:
        """Weights ``d_1 < d_2 < …`` of nonzero codewords."""

        return tuple(u for u in self.counts if u > 0)

    @property
    def minimum_distance(self) -> int:
        weights = self.nonzero_weights
        if not weights:
            raise CodeError("the zero code has no minimum distance")
        return weights[0]

    @property
    def weight_class_count(self) -> int:
        return len(self.nonzero_weights)

    def to_enumerator(self) -> "WeightEnumerator":
        return WeightEnumerator(self.length, dict(self.counts))

    def to_dict(self) -> dict:
        return {
            "n": exact(self.length),
            "k": exact(self.dimension),
            "q": exact(self.modulus),
            "counts": exact_map(self.counts),
        }


@dataclass(frozen=True, slots=True)
class WeightEnumerator:
    """Homogeneous polynomial ``Σ_u A_u x^{n−u} y^u``."""

    length: int
    coefficients: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {int(u): int(a) for u, a in sorted(self.coefficients.items()) if int(a) != 0}
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def from_counts(cls, length: int, counts: Mapping[int, int]) -> "WeightEnumerator":
        return cls(length, dict(counts))

    def as_expr(self) -> sympy.Expr:
        return sympy.Add(
            *[
                sympy.Integer(a) * X ** (self.length - u) * Y**u
                for u, a in self.coefficients.items()
            ]
        )

    def to_distribution(self, modulus: int, dimension: int) -> WeightDistribution:
        return WeightDistribution(self.length, modulus, dimension, dict(self.coefficients))

    def to_dict(self) -> dict:
        return {
            "n": exact(self.length),
            "coefficients": exact_map(self.coefficients),
            "polynomial": str(self.as_expr()),
        }


def macwilliams_dual_enumerator(
    enumerator: WeightEnumerator, k: int, p: int = 3
) -> WeightEnumerator:
    """Return ``W_{C^⊥}`` from ``W_C`` for a ``k``-dimensional code over GF(p).

    Substitutes ``x → x + (p−1)y``, ``y → x − y`` and divides by ``p^k``. A
    coefficient that is negative or not divisible by ``p^k`` means the input was
    not the enumerator of a ``k``-dimensional code.
    """

    check_modulus(p)
    if k < 0:
        raise ValueError(f"dimension must be nonnegative, got {k}")
    n = enumerator.length
    substituted = enumerator.as_expr().subs({X: X + (p - 1) * Y, Y: X - Y}, simultaneous=True)
    scale = p**k
    coefficients: dict[int, int] = {}
    for (x_exp, y_exp), coeff in Poly(sympy.expand(substituted), X, Y).terms():
        value = int(coeff)
        if value == 0:
            continue
        if x_exp + y_exp != n:
            raise NonIntegerCoefficient(f"enumerator is not homogeneous of degree {n}")
        if value < 0 or value % scale:
            raise NonIntegerCoefficient(
                f"coefficient {value}/{scale} of x^{x_exp} y^{y_exp} is not a nonnegative integer"
            )
        coefficients[y_exp] = value // scale
    return WeightEnumerator(n, coefficients)


def dual_distribution(distribution: WeightDistribution) -> WeightDistribution:
    """Weight distribution of the dual code via the MacWilliams transform."""

    dual = macwilliams_dual_enumerator(
        distribution.to_enumerator(), distribution.dimension, distribution.modulus
    )
    return dual.to_distribution(distribution.modulus, distribution.length - distribution.dimension)


__all__ = [
    "WeightDistribution",
    "WeightEnumerator",
    "X",
    "Y",
    "dual_distribution",
    "macwilliams_dual_enumerator",
]
