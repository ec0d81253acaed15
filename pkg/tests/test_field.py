import numpy as np
import pytest

from amdesigns.algebra.field import (
    FieldElement,
    Matrix,
    check_modulus,
    inverse_table,
    nullspace_basis,
    pivot_columns,
    rank,
    row_space_basis,
    rref,
)
from amdesigns.errors import FieldError


@pytest.mark.parametrize("modulus", [2, 3, 5, 7, 11, 13])
def test_inverse_table_inverts_every_unit(modulus):
    table = inverse_table(modulus)
    for value in range(1, modulus):
        assert (value * int(table[value])) % modulus == 1


@pytest.mark.parametrize("modulus", [0, 1, 4, 9, 17])
def test_unsupported_modulus_rejected(modulus):
    with pytest.raises(FieldError):
        check_modulus(modulus)


def test_field_element_arithmetic_mod_three():
    two = FieldElement(2)
    assert two + 2 == FieldElement(1)
    assert two * two == FieldElement(1)
    assert -two == FieldElement(1)
    assert 1 - two == FieldElement(2)
    assert two / two == FieldElement(1)
    assert two.inverse() == FieldElement(2)
    assert not FieldElement(3)


def test_field_element_rejects_mixed_moduli():
    with pytest.raises(FieldError):
        FieldElement(1, 3) + FieldElement(1, 5)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        FieldElement(0, 5).inverse()


def test_matrix_reduces_entries_and_is_read_only():
    matrix = Matrix([[4, -1], [3, 5]], 3)
    assert matrix.to_rows() == [[1, 2], [0, 2]]
    with pytest.raises(ValueError):
        matrix.array[0, 0] = 2


def test_rref_and_rank():
    matrix = Matrix([[1, 1, 1, 1], [2, 2, 2, 2], [0, 1, 2, 0]], 3)
    reduced, rank_value = rref(matrix)
    assert rank_value == 2
    assert reduced.to_rows()[:2] == [[1, 0, 2, 1], [0, 1, 2, 0]]
    assert pivot_columns(reduced, rank_value) == [0, 1]
    assert rank(matrix) == 2


def test_nullspace_is_orthogonal_and_complementary():
    matrix = Matrix([[1, 1, 1, 1], [0, 1, 2, 0]], 3)
    basis = nullspace_basis(matrix)
    assert basis.rows == matrix.cols - rank(matrix)
    assert (matrix @ basis.transpose()).is_zero()


def test_row_space_basis_drops_dependent_rows():
    basis = row_space_basis([[1, 0, 1], [2, 0, 2], [0, 1, 1]], 3)
    assert basis.rows == 2
    assert basis == Matrix([[1, 0, 1], [0, 1, 1]], 3)


def test_matmul_shape_mismatch():
    with pytest.raises(FieldError):
        Matrix(np.eye(2, dtype=int), 3) @ Matrix(np.eye(3, dtype=int), 3)


def test_rref_fixed_cases():
    identity = Matrix.identity(3, 3)
    assert rref(identity) == (identity, 3)
    zero = Matrix.zeros(2, 4, 3)
    reduced, rank_value = rref(zero)
    assert reduced == zero and rank_value == 0
    assert rref(Matrix([[1, 1], [2, 2]], 3)) == (Matrix([[1, 1], [0, 0]], 3), 1)


@pytest.mark.parametrize(
    "rows, modulus",
    [
        ([[1, 1, 1, 1], [2, 2, 2, 2], [0, 1, 2, 0]], 3),
        ([[0, 2, 1, 4], [3, 1, 0, 2], [3, 3, 1, 1]], 5),
        ([[2, 0, 1], [1, 2, 0], [0, 1, 2], [1, 1, 1]], 3),
    ],
)
def test_rref_is_idempotent(rows, modulus):
    reduced, rank_value = rref(Matrix(rows, modulus))
    assert rref(reduced) == (reduced, rank_value)
    assert rank_value == sum(1 for row in reduced.to_rows() if any(row))
