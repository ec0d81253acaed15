import logging
from fractions import Fraction

import pytest
import sympy

from amdesigns.criteria import CriterionParams, criterion_sum, generalized_binomial, scan_criterion
from amdesigns.criteria import sums
from amdesigns.criteria.sums import NO_KNOWN_EXAMPLES, binomial_term, criterion_params
from amdesigns.am import am_condition
from amdesigns.designs import DesignVerdict
from amdesigns.errors import DegenerateDenominator, WrongCase


@pytest.mark.parametrize(
    "m, i, expected",
    [(5, 2, 10), (0, 0, 1), (0, 1, 0), (-1, 3, -1), (-2, 2, 3), (3, -1, 0), (2, 5, 0)],
)
def test_generalized_binomial(m, i, expected):
    assert generalized_binomial(m, i) == expected


def test_binomial_term_small_values():
    assert [binomial_term(0, 1, w) for w in range(4)] == [1, -1, 0, 0]
    assert [binomial_term(1, 0, w) for w in range(4)] == [1, 2, 0, 0]


def test_case_one_on_dual_golay(golay11dual):
    params = criterion_params(golay11dual, am_condition(golay11dual))
    assert params.weights == (6,)
    assert (params.alphas, params.betas) == ((0,), (1,))
    assert criterion_sum(1, params, 0) == 1
    assert criterion_sum(1, params, 1) == -1


def test_scan_on_dual_golay(golay11dual):
    report = scan_criterion(golay11dual)
    assert report.case == 1
    assert report.roots == tuple(range(2, 12))
    assert report.candidate_weights == (7, 8, 9, 10, 11)
    assert report.actionable == (8, 9, 11)
    assert [outcome.weight for outcome in report.outcomes] == [8, 9, 11]
    assert all(outcome.verdict.is_design and outcome.complete for outcome in report.outcomes)
    assert report.anomalies == []
    assert NO_KNOWN_EXAMPLES in report.notes
    assert any("trivial" in note for note in report.notes)
    assert report.to_dict()["values"]["1"] == "-1"


def test_case_two_on_golay(golay11):
    report = scan_criterion(golay11)
    assert report.case == 2
    assert report.params.weights == (5, 6)
    assert report.values[1] == 3
    assert report.values[0] == 0
    assert report.actionable == (9,)
    assert report.anomalies == []


def test_case_three_formula():
    params = CriterionParams(12, 2, (4, 5, 7))
    value = criterion_sum(3, params, 1)
    terms = [binomial_term(a, b, 1) for a, b in zip(params.alphas, params.betas)]
    assert value == terms[0] - Fraction(3, 2) * terms[1] + Fraction(1, 2) * terms[2]


def test_case_three_degenerate_denominator():
    with pytest.raises(DegenerateDenominator):
        criterion_sum(3, CriterionParams(12, 2, (4, 6, 6)), 0)


def test_degenerate_parameters_flagged():
    params = CriterionParams(11, 4, (3,))
    assert params.betas == (-2,)
    assert params.degenerate


def test_case_mismatch_and_bad_inputs():
    params = CriterionParams(11, 4, (6,))
    with pytest.raises(WrongCase):
        criterion_sum(2, params, 0)
    with pytest.raises(ValueError):
        criterion_sum(1, params, -1)
    with pytest.raises(WrongCase):
        CriterionParams(11, 4, ())
    with pytest.raises(WrongCase):
        CriterionParams(11, 4, (1, 2, 3, 4))


def test_scan_needs_am_condition(repetition4):
    with pytest.raises(WrongCase):
        scan_criterion(repetition4)


def test_failed_candidate_is_reported(golay11dual, monkeypatch, caplog):
    def failing(design, t):
        return DesignVerdict(
            t,
            design.points,
            design.block_size,
            design.block_count,
            False,
            witness=((tuple(range(1, t + 1)), 1), (tuple(range(2, t + 2)), 0)),
        )

    monkeypatch.setattr(sums, "is_t_design", failing)
    with caplog.at_level(logging.ERROR, logger="amdesigns"):
        report = scan_criterion(golay11dual)
    assert report.anomalies == [8, 9, 11]
    assert any("ANOMALY" in record.getMessage() for record in caplog.records)


def _series_coefficients(params, order):
    z = sympy.Symbol("z")
    factors = [
        (1 + (params.p - 1) * z) ** alpha * (1 - z) ** beta
        for alpha, beta in zip(params.alphas, params.betas)
    ]
    if params.case == 1:
        combined = factors[0]
    elif params.case == 2:
        combined = factors[0] - factors[1]
    else:
        d1, d2, d3 = params.weights
        combined = (
            factors[0]
            - sympy.Rational(d3 - d1, d3 - d2) * factors[1]
            + sympy.Rational(d2 - d1, d3 - d2) * factors[2]
        )
    expansion = sympy.expand(sympy.series(combined, z, 0, order + 1).removeO())
    return [expansion.coeff(z, w) for w in range(order + 1)]


@pytest.mark.parametrize(
    "params",
    [
        CriterionParams(11, 4, (6,)),
        CriterionParams(10, 4, (4,)),
        CriterionParams(11, 4, (5, 6)),
        CriterionParams(12, 3, (5, 6, 8)),
        CriterionParams(9, 4, (4, 6, 7)),
    ],
)
def test_sums_are_generating_function_coefficients(params):
    expected = _series_coefficients(params, params.n)
    for w, coefficient in enumerate(expected):
        value = criterion_sum(params.case, params, w)
        assert sympy.Rational(value.numerator, value.denominator) == coefficient, w
