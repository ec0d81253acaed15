from fractions import Fraction
from math import comb

import pytest

from amdesigns.errors import SizeCapExceeded
from amdesigns.harmonic import HarmonicFunction, colex_subsets, down_operator, harm_basis
from amdesigns.harmonic.spaces import check_harmonic_size


def test_colex_order():
    assert colex_subsets(4, 2) == ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))


def test_down_operator_shape():
    matrix = down_operator(5, 2)
    assert matrix.shape == (5, 10)


@pytest.mark.parametrize("n, k, dimension", [(4, 1, 3), (6, 2, 9), (11, 2, 44), (18, 2, 135)])
def test_basis_dimension(n, k, dimension):
    basis = harm_basis(n, k)
    assert len(basis) == dimension == comb(n, k) - comb(n, k - 1)
    assert all(f.is_harmonic() for f in basis)


def test_basis_vectors_are_primitive_integers():
    for f in harm_basis(6, 2):
        assert all(value.denominator == 1 for value in f.values)
        assert any(f.values)


def test_function_evaluation_and_lift():
    f = HarmonicFunction(3, 1, (Fraction(1), Fraction(1), Fraction(-2)))
    assert f.is_harmonic()
    assert f((3,)) == -2
    assert f.lifted((1, 2)) == 2
    assert f.lifted((1, 2, 3)) == 0


def test_value_count_checked():
    with pytest.raises(ValueError):
        HarmonicFunction(4, 2, (Fraction(1),))


def test_degree_bounds():
    with pytest.raises(ValueError):
        harm_basis(4, 3)
    with pytest.raises(ValueError):
        harm_basis(4, 0)


def test_size_caps():
    with pytest.raises(SizeCapExceeded):
        check_harmonic_size(20, 7)
    with pytest.raises(SizeCapExceeded):
        check_harmonic_size(30, 5)
    with pytest.raises(SizeCapExceeded):
        harm_basis(12, 3, size_cap=100)
    check_harmonic_size(12, 6)
