"""Exact arithmetic over GF(p) for small primes and the matching row reduction.

Matrices are dense ``int64`` numpy arrays holding canonical residues in
``[0, p)``; every operation reduces modulo ``p`` so no value ever leaves the
field. Row reduction pivots on the leftmost nonzero column and the topmost
candidate row, which makes results reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..errors import FieldError

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)
DEFAULT_MODULUS = 3


def check_modulus(modulus: int) -> int:
    """Return ``modulus`` if it is a supported prime, else raise :class:`FieldError`."""

    if modulus not in SUPPORTED_PRIMES:
        raise FieldError(
            f"GF({modulus}) is not supported; choose one of {', '.join(map(str, SUPPORTED_PRIMES))}"
        )
    return modulus


def inverse_table(modulus: int) -> np.ndarray:
    """Multiplicative inverses modulo ``modulus``; entry 0 is unused."""

    check_modulus(modulus)
    table = np.zeros(modulus, dtype=np.int64)
    for value in range(1, modulus):
        table[value] = pow(value, -1, modulus)
    return table


@dataclass(frozen=True, slots=True)
class FieldElement:
    """Residue modulo a supported prime."""

    value: int
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self) -> None:
        check_modulus(self.modulus)
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _coerce(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise FieldError(f"cannot mix GF({self.modulus}) and GF({other.modulus})")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        raise TypeError(f"unsupported operand for GF({self.modulus}): {type(other).__name__}")

    def __add__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value, self.modulus)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.modulus})")
        return FieldElement(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other: "FieldElement | int") -> "FieldElement":
        divisor = FieldElement(self._coerce(other), self.modulus)
        return self * divisor.inverse()

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0


class Matrix:
    """Dense matrix over GF(p)."""

    __slots__ = ("_data", "modulus")

    def __init__(
        self,
        entries: Sequence[Sequence[int]] | np.ndarray,
        modulus: int = DEFAULT_MODULUS,
        *,
        cols: int | None = None,
    ) -> None:
        check_modulus(modulus)
        data = np.array(entries, dtype=np.int64)
        if data.size == 0:
            data = data.reshape(0, cols if cols is not None else (data.shape[-1] if data.ndim == 2 else 0))
        if data.ndim != 2:
            raise FieldError(f"matrix entries must be two-dimensional, got shape {data.shape}")
        data = np.mod(data, modulus)
        data.setflags(write=False)
        self._data = data
        self.modulus = modulus

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int = DEFAULT_MODULUS) -> "Matrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), modulus, cols=cols)

    @classmethod
    def identity(cls, size: int, modulus: int = DEFAULT_MODULUS) -> "Matrix":
        return cls(np.eye(size, dtype=np.int64), modulus, cols=size)

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the residues."""

        return self._data

    def __getitem__(self, index: tuple[int, int]) -> FieldElement:
        row, col = index
        return FieldElement(int(self._data[row, col]), self.modulus)

    def to_rows(self) -> list[list[int]]:
        return [[int(value) for value in row] for row in self._data]

    def transpose(self) -> "Matrix":
        return Matrix(self._data.T, self.modulus, cols=self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.modulus != self.modulus:
            raise FieldError(f"cannot mix GF({self.modulus}) and GF({other.modulus})")
        if self.cols != other.rows:
            raise FieldError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self._data @ other._data, self.modulus, cols=other.cols)

    def is_zero(self) -> bool:
        return not bool(self._data.any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.shape == other.shape
            and bool(np.array_equal(self._data, other._data))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join("".join(str(int(v)) for v in row) for row in self._data)
        return f"Matrix(GF({self.modulus}), {self.rows}x{self.cols}: {body})"


def rref(matrix: Matrix) -> tuple[Matrix, int]:
    """Return the reduced row echelon form of ``matrix`` and its rank."""

    modulus = matrix.modulus
    inverses = inverse_table(modulus)
    work = matrix.array.copy()
    rows, cols = work.shape
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        candidates = np.flatnonzero(work[pivot_row:, col])
        if candidates.size == 0:
            continue
        source = pivot_row + int(candidates[0])
        if source != pivot_row:
            work[[pivot_row, source]] = work[[source, pivot_row]]
        work[pivot_row] = (work[pivot_row] * inverses[work[pivot_row, col]]) % modulus
        factors = work[:, col].copy()
        factors[pivot_row] = 0
        work = np.mod(work - np.outer(factors, work[pivot_row]), modulus)
        pivot_row += 1
    return Matrix(work, modulus, cols=cols), pivot_row


def rank(matrix: Matrix) -> int:
    return rref(matrix)[1]


def pivot_columns(reduced: Matrix, rank_value: int) -> list[int]:
    """Pivot column of each nonzero row of a matrix already in RREF."""

    return [int(np.flatnonzero(reduced.array[row])[0]) for row in range(rank_value)]


def nullspace_basis(matrix: Matrix) -> Matrix:
    """Rows form a basis of ``{v : matrix · vᵀ = 0}``, one per free column."""

    modulus = matrix.modulus
    reduced, rank_value = rref(matrix)
    cols = matrix.cols
    pivots = pivot_columns(reduced, rank_value)
    pivot_set = set(pivots)
    free = [col for col in range(cols) if col not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    data = reduced.array
    for index, free_col in enumerate(free):
        basis[index, free_col] = 1
        for row, pivot_col in enumerate(pivots):
            basis[index, pivot_col] = (-int(data[row, free_col])) % modulus
    return Matrix(basis, modulus, cols=cols)


def row_space_basis(rows: Iterable[Sequence[int]], modulus: int = DEFAULT_MODULUS) -> Matrix:
    """Nonzero rows of the RREF of ``rows``."""

    reduced, rank_value = rref(Matrix(list(rows), modulus))
    return Matrix(reduced.array[:rank_value], modulus, cols=reduced.cols)


__all__ = [
    "DEFAULT_MODULUS",
    "FieldElement",
    "Matrix",
    "SUPPORTED_PRIMES",
    "check_modulus",
    "inverse_table",
    "nullspace_basis",
    "pivot_columns",
    "rank",
    "row_space_basis",
    "rref",
]
