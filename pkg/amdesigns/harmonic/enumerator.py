"""Harmonic weight enumerators, their dual transform and the harmonic design test."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy
from sympy import Poly, Rational

from ..errors import DimensionMismatch, EmptyWeight
from ..formatting import exact, exact_map
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET, DEFAULT_HARMONIC_MAX_DEGREE, DEFAULT_HARMONIC_SIZE_CAP
from ..algebra.field import check_modulus
from ..codes.enumerators import X, Y
from ..codes.linear import LinearCode, weight_distribution
from ..designs.support import block_subset_counts, support_design
from .spaces import HarmonicFunction, check_harmonic_size, colex_subsets, harm_basis

LOGGER = get_logger("amdesigns.harmonic")


@dataclass(frozen=True, slots=True)
class HarmonicEnumerator:
    """Coefficients ``c_w(f)`` presented as ``Σ_w c_w x^{n−w−k} y^{w−k}``."""

    n: int
    k: int
    coefficients: dict[int, Fraction] = field(default_factory=dict)

    def __getitem__(self, weight: int) -> Fraction:
        return self.coefficients.get(weight, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients.values())

    def as_expr(self) -> sympy.Expr:
        terms = []
        for w, value in sorted(self.coefficients.items()):
            if not value:
                continue
            if not self.k <= w <= self.n - self.k:
                raise ValueError(f"c_{w} must vanish outside {self.k}..{self.n - self.k}, got {value}")
            terms.append(
                Rational(value.numerator, value.denominator)
                * X ** (self.n - w - self.k)
                * Y ** (w - self.k)
            )
        return sympy.Add(*terms)

    def to_dict(self) -> dict:
        return {
            "n": exact(self.n),
            "k": exact(self.k),
            "coefficients": exact_map(self.coefficients),
            "polynomial": str(self.as_expr()),
        }


def _inclusion_vector(blocks, n: int, k: int) -> list[int]:
    counts = block_subset_counts(blocks, k)
    return [counts.get(subset, 0) for subset in colex_subsets(n, k)]


def harmonic_enumerator(
    code: LinearCode,
    f: HarmonicFunction,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> HarmonicEnumerator:
    """``c_w(f) = Σ_{c ∈ C_w} f̃(supp c)`` for every nonempty nonzero weight ``w``.

    Computed as ``⟨f, N_w⟩`` where ``N_w(T)`` counts weight-w codewords whose
    support contains the k-subset ``T``.
    """

    if f.n != code.n:
        raise DimensionMismatch(f"function lives on {f.n} points, code has length {code.n}")
    distribution = weight_distribution(code, budget=budget, workers=workers)
    coefficients: dict[int, Fraction] = {}
    for weight in distribution.nonzero_weights:
        if weight < f.k:
            coefficients[weight] = Fraction(0)
            continue
        design = support_design(code, weight, budget=budget, workers=workers)
        coefficients[weight] = f.dot(_inclusion_vector(design.blocks, code.n, f.k))
    return HarmonicEnumerator(code.n, f.k, coefficients)


def dual_transform(z: HarmonicEnumerator, p: int = 3) -> HarmonicEnumerator:
    """Substitute ``x → x + (p−1)y``, ``y → x − y`` into the reduced polynomial.

    The result's ``x^{n−2k−j} y^j`` coefficient is reported at weight ``j + k``.
    Only proportionality to the dual code's enumerator is asserted; the global
    scalar is left to :func:`proportionality`.
    """

    check_modulus(p)
    degree = z.n - 2 * z.k
    expr = z.as_expr()
    if expr == 0:
        return HarmonicEnumerator(z.n, z.k, {})
    substituted = sympy.expand(expr.subs({X: X + (p - 1) * Y, Y: X - Y}, simultaneous=True))
    coefficients: dict[int, Fraction] = {}
    for (x_exp, y_exp), coeff in Poly(substituted, X, Y).terms():
        if x_exp + y_exp != degree:
            raise ValueError(f"harmonic enumerator is not homogeneous of degree {degree}")
        value = Rational(coeff)
        coefficients[y_exp + z.k] = Fraction(int(value.p), int(value.q))
    return HarmonicEnumerator(z.n, z.k, coefficients)


@dataclass(frozen=True, slots=True)
class Proportionality:
    proportional: bool
    scalar: Fraction | None = None

    def to_dict(self) -> dict:
        return {
            "proportional": self.proportional,
            "scalar": exact(self.scalar) if self.scalar is not None else None,
        }


def proportionality(left: HarmonicEnumerator, right: HarmonicEnumerator) -> Proportionality:
    """Whether ``right = scalar · left``, tested by vanishing 2×2 cross-products."""

    weights = sorted(set(left.coefficients) | set(right.coefficients))
    a = [left[w] for w in weights]
    b = [right[w] for w in weights]
    left_zero = not any(a)
    right_zero = not any(b)
    if left_zero or right_zero:
        return Proportionality(left_zero and right_zero)
    for i in range(len(weights)):
        for j in range(i + 1, len(weights)):
            if a[i] * b[j] != a[j] * b[i]:
                return Proportionality(False)
    pivot = next(i for i, value in enumerate(a) if value)
    return Proportionality(True, b[pivot] / a[pivot])


def harmonic_design_check(
    code: LinearCode,
    weight: int,
    t: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    max_degree: int = DEFAULT_HARMONIC_MAX_DEGREE,
    size_cap: int = DEFAULT_HARMONIC_SIZE_CAP,
) -> bool:
    """``D_w`` is a t-design iff ``c_w(f) = 0`` for every ``f ∈ Harm_j``, ``1 ≤ j ≤ t``.

    ``Harm_j`` is zero for ``j > n/2``, so those degrees are skipped.
    """

    if weight_distribution(code, budget=budget, workers=workers)[weight] == 0:
        raise EmptyWeight(weight)
    if not 0 <= t <= weight:
        raise ValueError(f"t must lie in 0..{weight}, got {t}")
    degrees = [j for j in range(1, t + 1) if 2 * j <= code.n]
    for j in degrees:
        check_harmonic_size(code.n, j, max_degree=max_degree, size_cap=size_cap)
    design = support_design(code, weight, budget=budget, workers=workers)
    for j in degrees:
        vector = _inclusion_vector(design.blocks, code.n, j)
        for f in harm_basis(code.n, j, max_degree=max_degree, size_cap=size_cap):
            if f.dot(vector):
                LOGGER.debug("c_%s(f) != 0 for some f in Harm_%s of %s", weight, j, code.label)
                return False
    return True


__all__ = [
    "HarmonicEnumerator",
    "Proportionality",
    "dual_transform",
    "harmonic_design_check",
    "harmonic_enumerator",
    "proportionality",
]
