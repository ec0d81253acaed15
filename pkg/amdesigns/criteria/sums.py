"""Binomial-sum criteria for support designs of the dual code gaining one level.

For a code meeting the AM-condition with ``d^⊥ − t ∈ {1, 2, 3}`` and its
smallest weights ``d_1 < d_2 < d_3``, set ``α_ℓ = n − d_ℓ − (t+1)`` and
``β_ℓ = d_ℓ − (t+1)``. The sums below vanish at ``w`` only if
``D^⊥_{w+t+1}`` may be a (t+1)-design. The scanner evaluates the sum
for every ``w``, then verifies each nonempty candidate by counting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from ..errors import DegenerateDenominator, WrongCase
from ..formatting import exact, exact_map
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET
from ..codes.linear import LinearCode, dual, weight_distribution
from ..designs.support import DesignVerdict, is_t_design, support_design
from ..am.condition import AMReport, am_condition

LOGGER = get_logger("amdesigns.criteria")

NO_KNOWN_EXAMPLES = (
    "no explicit codes fulfilling this criterion are known in the literature; "
    "outcomes below are counted, not presumed"
)


def generalized_binomial(m: int, i: int) -> int:
    """``C(m, i) = m(m−1)…(m−i+1)/i!`` for any integer ``m``; zero for ``i < 0``."""

    if i < 0:
        return 0
    numerator = 1
    for step in range(i):
        numerator *= m - step
    return numerator // factorial(i)


@dataclass(frozen=True, slots=True)
class CriterionParams:
    n: int
    t: int
    weights: tuple[int, ...]
    p: int = 3

    def __post_init__(self) -> None:
        if not 1 <= len(self.weights) <= 3:
            raise WrongCase(f"the criteria use 1 to 3 weights, got {len(self.weights)}")

    @property
    def case(self) -> int:
        return len(self.weights)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(self.n - d - (self.t + 1) for d in self.weights)

    @property
    def betas(self) -> tuple[int, ...]:
        return tuple(d - (self.t + 1) for d in self.weights)

    @property
    def degenerate(self) -> bool:
        """Some ``α_ℓ`` or ``β_ℓ`` is negative."""

        return any(value < 0 for value in self.alphas + self.betas)

    def to_dict(self) -> dict:
        return {
            "n": exact(self.n),
            "t": exact(self.t),
            "q": exact(self.p),
            "weights": [exact(d) for d in self.weights],
            "alphas": [exact(a) for a in self.alphas],
            "betas": [exact(b) for b in self.betas],
            "degenerate": self.degenerate,
        }


def binomial_term(alpha: int, beta: int, w: int, p: int = 3) -> int:
    """``Σ_{i+j=w} (p−1)^i C(α,i) (−1)^j C(β,j)``."""

    return sum(
        (p - 1) ** i
        * generalized_binomial(alpha, i)
        * (-1) ** (w - i)
        * generalized_binomial(beta, w - i)
        for i in range(w + 1)
    )


def criterion_sum(case: int, params: CriterionParams, w: int) -> Fraction:
    """Exact value of the case-``case`` sum at ``w``."""

    if case != params.case:
        raise WrongCase(f"case {case} needs {case} weights, params carry {params.case}")
    if w < 0:
        raise ValueError(f"w must be nonnegative, got {w}")
    terms = [
        binomial_term(alpha, beta, w, params.p) for alpha, beta in zip(params.alphas, params.betas)
    ]
    if case == 1:
        return Fraction(terms[0])
    if case == 2:
        return Fraction(terms[0] - terms[1])
    d1, d2, d3 = params.weights
    if d3 == d2:
        raise DegenerateDenominator(f"d_3 = d_2 = {d2}")
    return (
        Fraction(terms[0])
        - Fraction(d3 - d1, d3 - d2) * terms[1]
        + Fraction(d2 - d1, d3 - d2) * terms[2]
    )


@dataclass(frozen=True, slots=True)
class CandidateOutcome:
    weight: int
    verdict: DesignVerdict
    complete: bool

    def to_dict(self) -> dict:
        return {
            "weight": exact(self.weight),
            "is_design": self.verdict.is_design,
            "complete": self.complete,
            "verdict": self.verdict.to_dict(),
        }


@dataclass(slots=True)
class CriterionReport:
    params: CriterionParams
    values: dict[int, Fraction]
    roots: tuple[int, ...]
    candidate_weights: tuple[int, ...]
    actionable: tuple[int, ...]
    outcomes: list[CandidateOutcome] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def case(self) -> int:
        return self.params.case

    @property
    def anomalies(self) -> list[int]:
        return [outcome.weight for outcome in self.outcomes if not outcome.verdict.is_design]

    def to_dict(self) -> dict:
        return {
            "case": exact(self.case),
            "params": self.params.to_dict(),
            "values": exact_map(self.values),
            "roots": [exact(w) for w in self.roots],
            "candidate_weights": [exact(w) for w in self.candidate_weights],
            "actionable": [exact(w) for w in self.actionable],
            "outcomes": [outcome.to_dict() for outcome in self.outcomes],
            "notes": list(self.notes),
        }


def criterion_params(code: LinearCode, report: AMReport) -> CriterionParams:
    """Pick ``d_1 … d_{d^⊥−t}`` from the nonzero weights inside the AM window."""

    if report.t is None:
        raise WrongCase(f"{code.label} has no t satisfying the AM-condition")
    case = report.d_dual - report.t
    if case not in (1, 2, 3):
        raise WrongCase(f"d_dual - t = {case}; the criteria cover 1, 2 and 3")
    window = [u for u in report.weights if u <= code.n - report.t]
    return CriterionParams(code.n, report.t, tuple(window[:case]), code.modulus)


def scan_criterion(
    code: LinearCode,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    report: AMReport | None = None,
) -> CriterionReport:
    """Evaluate the criterion for ``w = 0..n`` and count-check every candidate."""

    report = report or am_condition(code, budget=budget, workers=workers)
    params = criterion_params(code, report)
    values = {w: criterion_sum(params.case, params, w) for w in range(code.n + 1)}
    roots = tuple(w for w, value in values.items() if value == 0)
    candidates = tuple(w + params.t + 1 for w in roots if w + params.t + 1 <= code.n)
    dual_code = dual(code)
    dual_side = weight_distribution(dual_code, budget=budget, workers=workers)
    actionable = tuple(u for u in candidates if dual_side[u] > 0)
    result = CriterionReport(params, values, roots, candidates, actionable)
    result.notes.append(NO_KNOWN_EXAMPLES)
    if params.degenerate:
        result.notes.append(
            "negative alpha or beta: binomials use the generalized falling-factorial rule, "
            "outside the range the criterion was proved for"
        )
    for weight in actionable:
        design = support_design(dual_code, weight, budget=budget, workers=workers)
        verdict = is_t_design(design, params.t + 1)
        result.outcomes.append(CandidateOutcome(weight, verdict, design.is_complete))
    trivial = [o.weight for o in result.outcomes if o.verdict.is_design and o.complete]
    if trivial:
        result.notes.append(
            "candidates "
            + ", ".join(map(str, trivial))
            + " carry complete designs (every subset equally often), a trivial fulfilment"
        )
    if result.anomalies:
        LOGGER.error(
            "ANOMALY: criterion roots %s give dual weights %s that fail the %s-design count; params %s",
            list(roots),
            result.anomalies,
            params.t + 1,
            params.to_dict(),
        )
    return result


__all__ = [
    "CandidateOutcome",
    "CriterionParams",
    "CriterionReport",
    "binomial_term",
    "criterion_params",
    "criterion_sum",
    "generalized_binomial",
    "scan_criterion",
]
