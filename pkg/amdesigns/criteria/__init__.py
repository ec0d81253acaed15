"""Binomial-sum criteria, enumerator identities and the sphere-sum scanner."""

from .diophantine import DiophantineSolution, diophantine_scan, exact_power, sphere_sum
from .identities import (
    ConjectureCheck,
    IdentityCheck,
    check_conjecture_identity,
    check_remark2_identity,
)
from .sums import (
    CandidateOutcome,
    CriterionParams,
    CriterionReport,
    criterion_sum,
    generalized_binomial,
    scan_criterion,
)

__all__ = [
    "CandidateOutcome",
    "ConjectureCheck",
    "CriterionParams",
    "CriterionReport",
    "DiophantineSolution",
    "IdentityCheck",
    "check_conjecture_identity",
    "check_remark2_identity",
    "criterion_sum",
    "diophantine_scan",
    "exact_power",
    "generalized_binomial",
    "scan_criterion",
    "sphere_sum",
]
