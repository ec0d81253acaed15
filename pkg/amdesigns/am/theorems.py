"""Instance-level checks of the two- and three-weight classification theorems.

Each theorem has hypotheses (ternary code, AM-condition, number of weight
classes) and a disjunctive conclusion on ``d^⊥`` and ``t``. A verdict records
which disjunct holds for the given code; if none does, the instance is logged
as an anomaly with every computed parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..errors import NotApplicable
from ..formatting import exact
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET
from ..codes.enumerators import WeightDistribution
from ..codes.linear import LinearCode, weight_distribution
from .condition import AMReport, am_condition

LOGGER = get_logger("amdesigns.am")

THEOREM_IDS = ("1.1", "1.2", "1.3")

# Descriptive names accepted wherever a theorem id is.
THEOREM_ALIASES = {"two-weight": "1.1", "three-weight": "1.2", "three-weight-full": "1.3"}


@dataclass(frozen=True, slots=True)
class TheoremVerdict:
    theorem_id: str
    applicable: bool
    branch: str | None
    consistent: bool
    parameters: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "applicable": self.applicable,
            "branch": self.branch,
            "consistent": self.consistent,
            "parameters": dict(self.parameters),
        }

    def to_markdown(self) -> str:
        state = "consistent" if self.consistent else "INCONSISTENT"
        params = ", ".join(f"{key} = {value}" for key, value in self.parameters.items())
        return f"Theorem {self.theorem_id}: branch {self.branch or 'none'} ({state}); {params}"


def _two_weight(n: int, k: int, d: int, d_dual: int, t: int) -> str | None:
    if d_dual == 5 and (n, k, d) == (11, 5, 6) and t == 4:
        return "(1)"
    if d_dual <= 4 and t <= 3:
        return "(2)"
    return None


def _three_weight(n: int, k: int, d: int, d_dual: int, t: int) -> str | None:
    if d_dual <= 6 and t <= 5:
        return "main"
    return None


def _three_weight_full(n: int, k: int, d: int, d_dual: int, t: int) -> str | None:
    if d_dual == 6 and (n, k, d) == (12, 6, 6) and t == 5:
        return "(1)"
    if d_dual <= 5 and t <= 4:
        return "(2)"
    return None


_CONCLUSIONS: dict[str, Callable[[int, int, int, int, int], str | None]] = {
    "1.1": _two_weight,
    "1.2": _three_weight,
    "1.3": _three_weight_full,
}

_WEIGHT_CLASSES = {"1.1": 2, "1.2": 3, "1.3": 3}


def _check_hypotheses(
    theorem_id: str, code: LinearCode, distribution: WeightDistribution, report: AMReport
) -> None:
    if code.modulus != 3:
        raise NotApplicable(
            f"theorem {theorem_id} concerns ternary codes, got GF({code.modulus})"
        )
    expected = _WEIGHT_CLASSES[theorem_id]
    if distribution.weight_class_count != expected:
        raise NotApplicable(
            f"theorem {theorem_id} needs a {expected}-weight code, "
            f"{code.label} has {distribution.weight_class_count} nonzero weights"
        )
    if theorem_id == "1.3" and distribution[code.n] == 0:
        raise NotApplicable(f"theorem {theorem_id} needs a codeword of weight n = {code.n}")
    if report.t is None:
        raise NotApplicable(f"{code.label} does not satisfy the AM-condition")


def resolve_theorem_id(name: str) -> str:
    """Canonical id for ``name``: one of THEOREM_IDS or a THEOREM_ALIASES key."""

    canonical = THEOREM_ALIASES.get(name, name)
    if canonical not in THEOREM_IDS:
        choices = ", ".join(THEOREM_IDS + tuple(THEOREM_ALIASES))
        raise ValueError(f"Unknown theorem id: {name}. Choose one of {choices}")
    return canonical


def verify_theorem_instance(
    code: LinearCode,
    theorem_id: str,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    report: AMReport | None = None,
) -> TheoremVerdict:
    """Match the computed ``d^⊥``, ``t`` and ``[n,k,d]`` against a conclusion."""

    theorem_id = resolve_theorem_id(theorem_id)
    distribution = weight_distribution(code, budget=budget, workers=workers)
    report = report or am_condition(code, budget=budget, workers=workers)
    _check_hypotheses(theorem_id, code, distribution, report)

    t = report.t
    d = distribution.minimum_distance
    branch = _CONCLUSIONS[theorem_id](code.n, code.k, d, report.d_dual, t)
    parameters = {
        "n": exact(code.n),
        "k": exact(code.k),
        "d": exact(d),
        "d_dual": exact(report.d_dual),
        "t": exact(t),
        "weights": ",".join(exact(w) for w in distribution.nonzero_weights),
    }
    verdict = TheoremVerdict(theorem_id, True, branch, branch is not None, parameters)
    if not verdict.consistent:
        LOGGER.error(
            "ANOMALY: theorem %s conclusion fails on %s; parameters %s; distribution %s",
            theorem_id,
            code.label,
            parameters,
            distribution.to_dict(),
        )
    return verdict


__all__ = [
    "THEOREM_ALIASES",
    "THEOREM_IDS",
    "TheoremVerdict",
    "resolve_theorem_id",
    "verify_theorem_instance",
]
