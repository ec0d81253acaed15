"""Design strength of every weight class: δ(C), s(C) and the weights in between."""

from __future__ import annotations

from dataclasses import dataclass

from ..formatting import exact
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET, DEFAULT_T_MAX_PROBE
from ..codes.linear import LinearCode, weight_distribution
from .support import DesignVerdict, is_t_design, support_design

LOGGER = get_logger("amdesigns.designs")


@dataclass(frozen=True, slots=True)
class WeightStrength:
    weight: int
    block_count: int
    strength: int
    capped: bool
    failure: DesignVerdict | None = None

    def to_dict(self) -> dict:
        payload: dict = {
            "weight": exact(self.weight),
            "blocks": exact(self.block_count),
            "strength": exact(self.strength),
            "capped": self.capped,
        }
        if self.failure is not None:
            payload["first_failure"] = self.failure.to_dict()
        return payload


@dataclass(frozen=True, slots=True)
class StrengthReport:
    """Largest t for all weights (``delta``) and for some weight (``s``)."""

    delta: int
    s: int
    t_max_probe: int
    table: tuple[WeightStrength, ...]

    @property
    def cap_hit(self) -> bool:
        return any(row.capped for row in self.table)

    @property
    def gap_weights(self) -> tuple[int, ...]:
        return tuple(row.weight for row in self.table if row.strength > self.delta)

    def strength_of(self, weight: int) -> int:
        for row in self.table:
            if row.weight == weight:
                return row.strength
        raise KeyError(weight)

    def to_dict(self) -> dict:
        return {
            "delta": exact(self.delta),
            "s": exact(self.s),
            "t_max_probe": exact(self.t_max_probe),
            "cap_hit": self.cap_hit,
            "gap_weights": [exact(w) for w in self.gap_weights],
            "weights": [row.to_dict() for row in self.table],
        }


def _weight_strength(
    code: LinearCode, weight: int, t_max_probe: int, budget: int, workers: int
) -> WeightStrength:
    design = support_design(code, weight, budget=budget, workers=workers)
    limit = min(t_max_probe, weight)
    capped = limit == t_max_probe
    if design.block_size == design.points:
        return WeightStrength(weight, design.block_count, limit, capped)
    strength = 0
    for t in range(1, limit + 1):
        verdict = is_t_design(design, t)
        if not verdict.is_design:
            return WeightStrength(weight, design.block_count, strength, False, verdict)
        strength = t
    return WeightStrength(weight, design.block_count, strength, capped)


def delta_and_s(
    code: LinearCode,
    t_max_probe: int = DEFAULT_T_MAX_PROBE,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> StrengthReport:
    """Probe every nonempty nonzero weight class up to ``t_max_probe``.

    Strength is downward closed, so probing a weight stops at its first
    failure. A weight-w class never reports more than w, even when its design
    is complete; ``capped`` marks classes that survived the probe at
    ``t_max_probe`` itself.
    """

    if t_max_probe < 1:
        raise ValueError(f"t_max_probe must be at least 1, got {t_max_probe}")
    distribution = weight_distribution(code, budget=budget, workers=workers)
    table = tuple(
        _weight_strength(code, weight, t_max_probe, budget, workers)
        for weight in distribution.nonzero_weights
    )
    strengths = [row.strength for row in table]
    report = StrengthReport(min(strengths), max(strengths), t_max_probe, table)
    LOGGER.info("%s: delta = %s, s = %s", code.label, report.delta, report.s)
    return report


def strength_gap(
    code: LinearCode,
    t_max_probe: int = DEFAULT_T_MAX_PROBE,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> tuple[int, int, tuple[int, ...]]:
    """``(δ, s, weights stronger than δ)``; a nonempty tuple means δ(C) < s(C)."""

    report = delta_and_s(code, t_max_probe, budget=budget, workers=workers)
    return report.delta, report.s, report.gap_weights


__all__ = ["StrengthReport", "WeightStrength", "delta_and_s", "strength_gap"]
