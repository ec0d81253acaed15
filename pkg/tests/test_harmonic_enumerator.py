from fractions import Fraction

import pytest

from amdesigns.codes import LinearCode, dual, weight_distribution
from amdesigns.designs import is_t_design, support_design
from amdesigns.errors import DimensionMismatch, EmptyWeight
from amdesigns.harmonic import (
    HarmonicEnumerator,
    HarmonicFunction,
    dual_transform,
    harm_basis,
    harmonic_design_check,
    harmonic_enumerator,
    proportionality,
)


@pytest.fixture
def small_code() -> LinearCode:
    return LinearCode.from_rows([[1, 1, 0]], 3, name="small")


@pytest.fixture
def f3() -> HarmonicFunction:
    return HarmonicFunction(3, 1, (Fraction(1), Fraction(1), Fraction(-2)))


def test_enumerator_of_small_code(small_code, f3):
    z = harmonic_enumerator(small_code, f3)
    assert z.coefficients == {2: Fraction(4)}
    assert z.to_dict()["polynomial"] == "4*y"


def test_enumerator_of_dual_small_code(small_code, f3):
    z = harmonic_enumerator(dual(small_code), f3)
    assert z.coefficients == {1: Fraction(-4), 2: Fraction(4), 3: Fraction(0)}


def test_transform_is_proportional_to_dual_enumerator(small_code, f3):
    transformed = dual_transform(harmonic_enumerator(small_code, f3), 3)
    assert transformed.coefficients == {1: Fraction(4), 2: Fraction(-4)}
    relation = proportionality(transformed, harmonic_enumerator(dual(small_code), f3))
    assert relation.proportional
    assert relation.scalar == -1
    assert relation.to_dict() == {"proportional": True, "scalar": "-1"}


def test_designs_annihilate_low_degree_harmonics(golay12):
    for f in harm_basis(12, 2)[:5]:
        assert harmonic_enumerator(golay12, f).is_zero


def test_zero_enumerator_transforms_to_zero(golay11):
    f = harm_basis(11, 2)[0]
    z = harmonic_enumerator(golay11, f)
    assert z.is_zero
    assert dual_transform(z).is_zero


def test_proportionality_cases():
    a = HarmonicEnumerator(6, 1, {2: Fraction(1), 3: Fraction(2)})
    b = HarmonicEnumerator(6, 1, {2: Fraction(3), 3: Fraction(6)})
    c = HarmonicEnumerator(6, 1, {2: Fraction(3), 3: Fraction(5)})
    zero = HarmonicEnumerator(6, 1, {})
    assert proportionality(a, b).scalar == 3
    assert not proportionality(a, c).proportional
    assert not proportionality(zero, a).proportional
    assert proportionality(zero, zero).proportional


def test_coefficient_outside_range_rejected():
    with pytest.raises(ValueError):
        HarmonicEnumerator(6, 2, {5: Fraction(1)}).as_expr()


def test_dimension_mismatch(golay12, f3):
    with pytest.raises(DimensionMismatch):
        harmonic_enumerator(golay12, f3)


def test_harmonic_design_check_matches_counting(small_code, golay11dual):
    assert not harmonic_design_check(small_code, 2, 1)
    assert not is_t_design(support_design(small_code, 2), 1).is_design
    assert harmonic_design_check(golay11dual, 6, 3)
    assert harmonic_design_check(golay11dual, 9, 0)


def test_harmonic_design_check_errors(golay11dual):
    with pytest.raises(EmptyWeight):
        harmonic_design_check(golay11dual, 7, 2)
    with pytest.raises(ValueError):
        harmonic_design_check(golay11dual, 6, 7)


@pytest.mark.slow
def test_harmonic_design_check_at_five(golay11dual, golay12):
    assert not harmonic_design_check(golay11dual, 6, 5)
    assert harmonic_design_check(golay11dual, 9, 5)
    assert harmonic_design_check(golay12, 6, 5)


@pytest.mark.slow
def test_degree_five_harmonics_on_golay_pair(golay11, golay11dual):
    basis = harm_basis(11, 5)
    assert len(basis) == 132
    nonzero = 0
    for f in basis:
        primal = harmonic_enumerator(golay11, f)
        dual_side = harmonic_enumerator(golay11dual, f)
        relation = proportionality(dual_transform(primal), dual_side)
        assert relation.proportional
        nonzero += not primal.is_zero
    assert nonzero


@pytest.mark.slow
@pytest.mark.parametrize("fixture", ["golay11", "golay11dual", "golay12"])
def test_harmonic_check_agrees_with_counting_everywhere(request, fixture):
    code = request.getfixturevalue(fixture)
    compared = 0
    for weight in weight_distribution(code).nonzero_weights:
        design = support_design(code, weight)
        for t in range(min(5, weight) + 1):
            assert harmonic_design_check(code, weight, t) == is_t_design(design, t).is_design, (
                weight,
                t,
            )
            compared += 1
    assert compared == {"golay11": 30, "golay11dual": 12, "golay12": 18}[fixture]


@pytest.mark.slow
@pytest.mark.parametrize("fixture", ["golay11", "golay11dual", "golay12"])
def test_every_degree_two_function_transforms_proportionally(request, fixture):
    code = request.getfixturevalue(fixture)
    dual_code = dual(code)
    basis = harm_basis(code.n, 2)
    assert len(basis) == code.n * (code.n - 3) // 2
    for f in basis:
        transformed = dual_transform(harmonic_enumerator(code, f))
        assert proportionality(transformed, harmonic_enumerator(dual_code, f)).proportional
