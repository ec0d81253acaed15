"""Finite-field arithmetic and row reduction."""

from .field import (
    DEFAULT_MODULUS,
    SUPPORTED_PRIMES,
    FieldElement,
    Matrix,
    check_modulus,
    nullspace_basis,
    rank,
    rref,
)

__all__ = [
    "DEFAULT_MODULUS",
    "FieldElement",
    "Matrix",
    "SUPPORTED_PRIMES",
    "check_modulus",
    "nullspace_basis",
    "rank",
    "rref",
]
