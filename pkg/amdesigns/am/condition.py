"""The Assmus–Mattson condition and the exhaustive check of its design guarantee.

A code satisfies the condition at strength ``t`` when

    d^⊥ − t = #{u : A_u > 0, 0 < u ≤ n − t}.

Under it every nonempty support design of the code and of its dual is a
t-design; :func:`verify_am_guarantee` confirms that claim by counting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NotApplicable
from ..formatting import exact, exact_map
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET
from ..codes.enumerators import WeightDistribution
from ..codes.linear import LinearCode, dual, weight_distribution
from ..designs.support import DesignVerdict, is_t_design, support_design

LOGGER = get_logger("amdesigns.am")


@dataclass(frozen=True, slots=True)
class AMReport:
    length: int
    d_dual: int
    admissible_t: tuple[int, ...]
    weight_count_window: dict[int, int]
    weights: tuple[int, ...]
    dual_weights: tuple[int, ...]

    @property
    def t(self) -> int | None:
        """Largest admissible strength, or ``None`` when the condition never holds."""

        return max(self.admissible_t) if self.admissible_t else None

    @property
    def satisfied(self) -> bool:
        return bool(self.admissible_t)

    def to_dict(self) -> dict:
        return {
            "n": exact(self.length),
            "d_dual": exact(self.d_dual),
            "t": exact(self.t) if self.t is not None else None,
            "admissible_t": [exact(t) for t in self.admissible_t],
            "window": exact_map(self.weight_count_window),
            "weights": [exact(w) for w in self.weights],
            "dual_weights": [exact(w) for w in self.dual_weights],
            "guarantee": (
                f"all D_u and D^perp_w are {self.t}-designs" if self.t is not None else None
            ),
        }


def am_window(distribution: WeightDistribution, t: int) -> int:
    """``#{u : A_u > 0, 0 < u ≤ n − t}``."""

    return sum(1 for u in distribution.nonzero_weights if u <= distribution.length - t)


def am_report(primal: WeightDistribution, dual_side: WeightDistribution) -> AMReport:
    """Evaluate the condition from the two weight distributions."""

    d_dual = dual_side.minimum_distance
    window = {t: am_window(primal, t) for t in range(1, d_dual)}
    admissible = tuple(t for t, count in window.items() if d_dual - t == count)
    return AMReport(
        primal.length,
        d_dual,
        admissible,
        window,
        primal.nonzero_weights,
        dual_side.nonzero_weights,
    )


def am_condition(
    code: LinearCode, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> AMReport:
    """Scan ``t = 1 .. d^⊥ − 1``; ``d^⊥`` comes from enumerating the dual."""

    primal = weight_distribution(code, budget=budget, workers=workers)
    dual_side = weight_distribution(dual(code), budget=budget, workers=workers)
    report = am_report(primal, dual_side)
    if report.t is None:
        LOGGER.info("%s: no t satisfies the AM-condition (d_dual = %s)", code.label, report.d_dual)
    else:
        LOGGER.info("%s: AM-condition holds for t in %s", code.label, list(report.admissible_t))
    return report


@dataclass(slots=True)
class AMGuarantee:
    """Counting verdicts for every nonempty ``D_u`` and ``D^⊥_w`` at strength ``t``."""

    t: int
    verdicts: dict[tuple[str, int], DesignVerdict] = field(default_factory=dict)
    skipped: list[tuple[str, int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(verdict.is_design for verdict in self.verdicts.values())

    @property
    def failures(self) -> list[tuple[str, int]]:
        return [key for key, verdict in self.verdicts.items() if not verdict.is_design]

    def to_dict(self) -> dict:
        return {
            "t": exact(self.t),
            "holds": self.holds,
            "verdicts": [
                {"side": side, **verdict.to_dict()} for (side, _), verdict in self.verdicts.items()
            ],
            "skipped": [{"side": side, "weight": exact(w)} for side, w in self.skipped],
        }


def verify_am_guarantee(
    code: LinearCode,
    report: AMReport | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> AMGuarantee:
    """Check by counting that every support design of C and C^⊥ is a t-design.

    Weights below ``t`` cannot carry a t-design and are listed as skipped.
    """

    report = report or am_condition(code, budget=budget, workers=workers)
    if report.t is None:
        raise NotApplicable(f"{code.label} does not satisfy the AM-condition")
    guarantee = AMGuarantee(report.t)
    for side, member, weights in (
        ("C", code, report.weights),
        ("C_perp", dual(code), report.dual_weights),
    ):
        for weight in weights:
            if weight < report.t:
                guarantee.skipped.append((side, weight))
                continue
            design = support_design(member, weight, budget=budget, workers=workers)
            guarantee.verdicts[(side, weight)] = is_t_design(design, report.t)
    if not guarantee.holds:
        LOGGER.error(
            "ANOMALY: AM guarantee fails for %s at t = %s; failing designs %s; report %s",
            code.label,
            report.t,
            guarantee.failures,
            report.to_dict(),
        )
    return guarantee


__all__ = [
    "AMGuarantee",
    "AMReport",
    "am_condition",
    "am_report",
    "am_window",
    "verify_am_guarantee",
]
