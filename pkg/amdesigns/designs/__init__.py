"""Support designs, t-design verdicts and design strengths."""

from .strength import StrengthReport, WeightStrength, delta_and_s, strength_gap
from .support import (
    DesignVerdict,
    SupportDesign,
    block_subset_counts,
    is_t_design,
    support_design,
)

__all__ = [
    "DesignVerdict",
    "StrengthReport",
    "SupportDesign",
    "WeightStrength",
    "block_subset_counts",
    "delta_and_s",
    "is_t_design",
    "strength_gap",
    "support_design",
]
