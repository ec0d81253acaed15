"""Data-free linear relations among dual harmonic coefficients.

Given the weights of a code and the dual weights known to be empty, the dual
harmonic enumerator is a combination

    Σ_w c′_w (x + (p−1)y)^{n−w−k} (x − y)^{w−k}

whose coefficients at the empty dual weights must vanish. Solving those
linear equations expresses every ``c′_w`` through the free unknowns; an
unknown forced to zero means the matching primal ``c_w`` vanishes for every
``f ∈ Harm_k``, and a dual coefficient that vanishes identically after
substitution means the corresponding dual support design passes degree ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from string import ascii_lowercase
from typing import Sequence

import sympy
from sympy import Poly

from ..errors import NotApplicable
from ..formatting import exact
from ..algebra.field import check_modulus
from ..codes.enumerators import X, Y


@dataclass(frozen=True, slots=True)
class RelationReport:
    n: int
    k: int
    modulus: int
    weights: tuple[int, ...]
    dual_zero_weights: tuple[int, ...]
    unknowns: dict[int, sympy.Symbol]
    solution: dict[int, sympy.Expr]
    dual_polynomial: sympy.Expr
    dual_coefficients: dict[int, sympy.Expr]

    @property
    def forced_zero_weights(self) -> tuple[int, ...]:
        """Primal weights whose coefficient vanishes for every solution."""

        return tuple(w for w, expr in self.solution.items() if sympy.simplify(expr) == 0)

    @property
    def vanishing_dual_weights(self) -> tuple[int, ...]:
        """Dual weights outside the imposed ones whose coefficient is identically zero."""

        return tuple(
            u
            for u, expr in self.dual_coefficients.items()
            if u not in self.dual_zero_weights and sympy.expand(expr) == 0
        )

    def coefficient(self, x_exp: int, y_exp: int) -> sympy.Expr:
        """Coefficient of ``x^{x_exp} y^{y_exp}`` in the solved dual polynomial."""

        if x_exp + y_exp != self.n - 2 * self.k:
            return sympy.Integer(0)
        return self.dual_coefficients.get(y_exp + self.k, sympy.Integer(0))

    def to_dict(self) -> dict:
        return {
            "n": exact(self.n),
            "k": exact(self.k),
            "q": exact(self.modulus),
            "weights": [exact(w) for w in self.weights],
            "dual_zero_weights": [exact(u) for u in self.dual_zero_weights],
            "relations": {
                str(self.unknowns[w]): str(expr) for w, expr in self.solution.items()
            },
            "forced_zero_weights": [exact(w) for w in self.forced_zero_weights],
            "vanishing_dual_weights": [exact(u) for u in self.vanishing_dual_weights],
            "dual_polynomial": str(self.dual_polynomial),
        }


def _unknowns(weights: Sequence[int]) -> dict[int, sympy.Symbol]:
    if len(weights) > len(ascii_lowercase):
        raise ValueError(f"at most {len(ascii_lowercase)} weights are supported")
    return {w: sympy.Symbol(f"{letter}'") for w, letter in zip(weights, ascii_lowercase)}


def _coefficients_by_weight(expr: sympy.Expr, n: int, k: int) -> dict[int, sympy.Expr]:
    degree = n - 2 * k
    poly = Poly(sympy.expand(expr), X, Y)
    return {j + k: poly.coeff_monomial(X ** (degree - j) * Y**j) for j in range(degree + 1)}


def solve_five_weight_relations(
    n: int = 18,
    k: int = 2,
    p: int = 3,
    weights: Sequence[int] = (6, 9, 12, 15),
    dual_zero_weights: Sequence[int] = (2, 3, 5),
) -> RelationReport:
    """Solve for the dual coefficients given the empty low dual weights.

    ``weights`` are the weights carrying a term in the reduced polynomial, so
    weights with ``w > n − k`` (such as ``n`` itself) are left out. The
    defaults describe the ternary [18,8,6] five-weight code with ``d^⊥ = 4``
    and no dual codewords of weight 5.
    """

    check_modulus(p)
    weights = tuple(sorted(weights))
    dual_zero_weights = tuple(sorted(dual_zero_weights))
    for w in weights + dual_zero_weights:
        if not k <= w <= n - k:
            raise ValueError(f"weight {w} has no term in the degree-{n - 2 * k} reduced polynomial")
    unknowns = _unknowns(weights)
    general = sympy.Add(
        *[
            unknowns[w] * (X + (p - 1) * Y) ** (n - w - k) * (X - Y) ** (w - k)
            for w in weights
        ]
    )
    coefficients = _coefficients_by_weight(general, n, k)
    equations = [coefficients[u] for u in dual_zero_weights]
    symbols = [unknowns[w] for w in weights]
    solutions = sympy.linsolve(equations, symbols)
    if not solutions:
        raise NotApplicable("the vanishing conditions admit no solution")
    (values,) = tuple(solutions)
    substitution = dict(zip(symbols, values))
    solution = {w: sympy.expand(value) for w, value in zip(weights, values)}
    dual_polynomial = sympy.factor_terms(sympy.expand(general.subs(substitution)))
    return RelationReport(
        n,
        k,
        p,
        weights,
        dual_zero_weights,
        unknowns,
        solution,
        dual_polynomial,
        _coefficients_by_weight(general.subs(substitution), n, k),
    )


__all__ = ["RelationReport", "solve_five_weight_relations"]
