"""Counting identities satisfied by few-weight codes with a large dual distance."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotApplicable
from ..formatting import exact
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET
from ..codes.linear import LinearCode, dual, weight_distribution
from ..am.condition import am_report
from .diophantine import sphere_sum

LOGGER = get_logger("amdesigns.criteria")


@dataclass(frozen=True, slots=True)
class IdentityCheck:
    kind: str
    lhs: int
    rhs: int
    hypothesis: str
    applicable: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "lhs": exact(self.lhs),
            "rhs": exact(self.rhs),
            "holds": self.holds,
            "hypothesis": self.hypothesis,
            "applicable": self.applicable,
        }


def check_remark2_identity(
    code: LinearCode, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> IdentityCheck:
    """Compare ``1 + Σ A_{d_ℓ}`` with the sphere-type sum for two- and three-weight codes.

    * two weights, ``d^⊥ ≥ 5``: ``Σ_{i≤2} C(n,i)(q−1)^i``
    * three weights, ``d^⊥ ≥ 7``: ``Σ_{i≤3} C(n,i)(q−1)^i``
    * three weights with ``d_3 = n``, ``d^⊥ ≥ 6``: ``q · Σ_{i≤2} C(n−1,i)(q−1)^i``

    Both sides are computed even when the dual-distance hypothesis fails;
    the check is then flagged as not applicable.
    """

    primal = weight_distribution(code, budget=budget, workers=workers)
    d_dual = weight_distribution(dual(code), budget=budget, workers=workers).minimum_distance
    weights = primal.nonzero_weights
    n, q = code.n, code.modulus
    lhs = primal.total
    if len(weights) == 2:
        check = IdentityCheck(
            "two_weight", lhs, sphere_sum(n, 2, q), "d_dual >= 5", d_dual >= 5
        )
    elif len(weights) == 3 and weights[-1] == n:
        check = IdentityCheck(
            "three_weight_full_support",
            lhs,
            q * sphere_sum(n - 1, 2, q),
            "d_dual >= 6",
            d_dual >= 6,
        )
    elif len(weights) == 3:
        check = IdentityCheck(
            "three_weight", lhs, sphere_sum(n, 3, q), "d_dual >= 7", d_dual >= 7
        )
    else:
        raise NotApplicable(
            f"the identities concern two- and three-weight codes, {code.label} has {len(weights)} weights"
        )
    if check.applicable and not check.holds:
        LOGGER.error(
            "ANOMALY: %s identity fails on %s: %s != %s", check.kind, code.label, lhs, check.rhs
        )
    return check


@dataclass(frozen=True, slots=True)
class ConjectureCheck:
    ell: int
    lhs: int
    rhs: int
    power: int
    am_satisfied: bool
    dual_distance_ok: bool

    @property
    def applicable(self) -> bool:
        return self.am_satisfied and self.dual_distance_ok

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs == self.power

    def to_dict(self) -> dict:
        return {
            "ell": exact(self.ell),
            "lhs": exact(self.lhs),
            "rhs": exact(self.rhs),
            "q_power_k": exact(self.power),
            "holds": self.holds,
            "am_satisfied": self.am_satisfied,
            "dual_distance_ok": self.dual_distance_ok,
            "applicable": self.applicable,
        }


def check_conjecture_identity(
    code: LinearCode, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> ConjectureCheck:
    """``1 + Σ α_i = Σ_{i≤ℓ} C(n,i)(q−1)^i = q^k`` for an ℓ-weight code.

    The statement is conjectural; applicability requires the AM-condition and
    ``d^⊥ ≥ 2ℓ + 1``.
    """

    primal = weight_distribution(code, budget=budget, workers=workers)
    dual_side = weight_distribution(dual(code), budget=budget, workers=workers)
    ell = primal.weight_class_count
    report = am_report(primal, dual_side)
    return ConjectureCheck(
        ell,
        primal.total,
        sphere_sum(code.n, ell, code.modulus),
        code.modulus**code.k,
        report.satisfied,
        dual_side.minimum_distance >= 2 * ell + 1,
    )


__all__ = [
    "ConjectureCheck",
    "IdentityCheck",
    "check_conjecture_identity",
    "check_remark2_identity",
]
