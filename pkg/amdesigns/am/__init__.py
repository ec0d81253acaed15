"""AM-condition reports and theorem verdicts."""

from .condition import AMGuarantee, AMReport, am_condition, am_report, verify_am_guarantee
from .theorems import (
    THEOREM_ALIASES,
    THEOREM_IDS,
    TheoremVerdict,
    resolve_theorem_id,
    verify_theorem_instance,
)

__all__ = [
    "AMGuarantee",
    "AMReport",
    "THEOREM_ALIASES",
    "THEOREM_IDS",
    "TheoremVerdict",
    "am_condition",
    "am_report",
    "resolve_theorem_id",
    "verify_am_guarantee",
    "verify_theorem_instance",
]
