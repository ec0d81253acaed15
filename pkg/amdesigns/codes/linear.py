"""Linear codes over GF(p): exhaustive enumeration, weight data and duals.

Codewords are produced by multiplying messages, taken in lexicographic order
over GF(p)^k, with the reduced generator matrix. Large message spaces are cut
into chunks that can be handed to a thread pool; every aggregate is an exact
integer sum, so the worker count never changes a result.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

import numpy as np

from ..algebra.field import DEFAULT_MODULUS, Matrix, nullspace_basis, rref
from ..errors import BudgetExceeded, CodeError
from ..formatting import digit_string, exact
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET
from .enumerators import WeightDistribution

LOGGER = get_logger("amdesigns.codes")

CHUNK_SIZE = 1 << 15


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Row space of a generator matrix, kept in reduced row echelon form."""

    generator: Matrix
    name: str | None = None
    _cache: dict[Any, Any] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        reduced, rank_value = rref(self.generator)
        if rank_value == 0:
            raise CodeError("generator matrix has rank 0")
        trimmed = Matrix(reduced.array[:rank_value], reduced.modulus, cols=reduced.cols)
        object.__setattr__(self, "generator", trimmed)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        modulus: int = DEFAULT_MODULUS,
        *,
        name: str | None = None,
    ) -> "LinearCode":
        return cls(Matrix(rows, modulus), name)

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def modulus(self) -> int:
        return self.generator.modulus

    @property
    def size(self) -> int:
        return self.modulus**self.k

    @property
    def label(self) -> str:
        return self.name or f"[{self.n},{self.k}] code over GF({self.modulus})"

    def __repr__(self) -> str:
        return f"LinearCode({self.label!r}, n={self.n}, k={self.k}, q={self.modulus})"

    def to_dict(self) -> dict:
        return {
            "name": self.label,
            "q": exact(self.modulus),
            "n": exact(self.n),
            "k": exact(self.k),
            "generator": [digit_string(row) for row in self.generator.to_rows()],
        }


def _check_budget(code: LinearCode, budget: int) -> None:
    if code.size > budget:
        raise BudgetExceeded(code.size, budget)


def _messages(start: int, stop: int, k: int, modulus: int) -> np.ndarray:
    indices = np.arange(start, stop, dtype=np.int64)
    powers = modulus ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] // powers[None, :]) % modulus


def _chunk_bounds(size: int, chunk_size: int) -> list[tuple[int, int]]:
    return [(start, min(start + chunk_size, size)) for start in range(0, size, chunk_size)]


def _encode_range(code: LinearCode, start: int, stop: int) -> np.ndarray:
    messages = _messages(start, stop, code.k, code.modulus)
    return (messages @ code.generator.array) % code.modulus


def iter_codeword_chunks(
    code: LinearCode,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk_size: int = CHUNK_SIZE,
) -> Iterator[np.ndarray]:
    """Yield blocks of codewords (one per row) in message order."""

    _check_budget(code, budget)
    for start, stop in _chunk_bounds(code.size, chunk_size):
        yield _encode_range(code, start, stop)


def enumerate_codewords(
    code: LinearCode, *, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield every codeword exactly once together with its Hamming weight."""

    for block in iter_codeword_chunks(code, budget=budget):
        weights = np.count_nonzero(block, axis=1)
        for row, weight in zip(block, weights):
            yield tuple(int(v) for v in row), int(weight)


def _map_chunks(code: LinearCode, task, workers: int) -> list:
    bounds = _chunk_bounds(code.size, CHUNK_SIZE)
    if workers <= 1 or len(bounds) == 1:
        return [task(start, stop) for start, stop in bounds]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda pair: task(*pair), bounds))


def weight_distribution(
    code: LinearCode, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> WeightDistribution:
    """Count codewords of every weight by full enumeration (cached per code)."""

    _check_budget(code, budget)
    cached = code._cache.get("distribution")
    if cached is not None:
        return cached

    def count(start: int, stop: int) -> np.ndarray:
        block = _encode_range(code, start, stop)
        return np.bincount(np.count_nonzero(block, axis=1), minlength=code.n + 1)

    totals = np.zeros(code.n + 1, dtype=np.int64)
    for partial in _map_chunks(code, count, workers):
        totals += partial
    distribution = WeightDistribution(
        code.n,
        code.modulus,
        code.k,
        {weight: int(total) for weight, total in enumerate(totals) if total},
    )
    LOGGER.debug("Enumerated %s codewords of %s", code.size, code.label)
    code._cache["distribution"] = distribution
    return distribution


def codewords_of_weight(
    code: LinearCode, weight: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> np.ndarray:
    """All codewords of Hamming weight ``weight`` as rows, in message order."""

    _check_budget(code, budget)
    key = ("weight", weight)
    cached = code._cache.get(key)
    if cached is not None:
        return cached

    def select(start: int, stop: int) -> np.ndarray:
        block = _encode_range(code, start, stop)
        return block[np.count_nonzero(block, axis=1) == weight]

    parts = _map_chunks(code, select, workers)
    words = np.concatenate(parts, axis=0) if parts else np.zeros((0, code.n), dtype=np.int64)
    words.setflags(write=False)
    code._cache[key] = words
    return words


def minimum_distance(code: LinearCode, *, budget: int = DEFAULT_BUDGET) -> int:
    return weight_distribution(code, budget=budget).minimum_distance


def dual(code: LinearCode) -> LinearCode:
    """Return ``C^⊥`` generated by a nullspace basis of the generator."""

    cached = code._cache.get("dual")
    if cached is not None:
        return cached
    if code.k == code.n:
        raise CodeError(f"{code.label} is the full space; its dual is the zero code")
    basis = nullspace_basis(code.generator)
    result = LinearCode(basis, f"{code.name}^perp" if code.name else None)
    code._cache["dual"] = result
    return result


def is_self_orthogonal(code: LinearCode) -> bool:
    """Whether ``G·Gᵀ = 0`` over GF(p), i.e. ``C ⊆ C^⊥``."""

    gram = code.generator @ code.generator.transpose()
    return gram.is_zero()


def extend_with_parity(code: LinearCode, *, name: str | None = None) -> LinearCode:
    """Append the coordinate ``−Σ c_i`` so every codeword sums to zero."""

    data = code.generator.array
    parity = (-data.sum(axis=1)) % code.modulus
    extended = np.concatenate([data, parity[:, None]], axis=1)
    return LinearCode(Matrix(extended, code.modulus, cols=code.n + 1), name)


def same_codewords(left: LinearCode, right: LinearCode) -> bool:
    """Equal codeword sets; reduced generators are canonical for a row space."""

    return left.modulus == right.modulus and left.generator == right.generator


__all__ = [
    "CHUNK_SIZE",
    "LinearCode",
    "codewords_of_weight",
    "dual",
    "enumerate_codewords",
    "extend_with_parity",
    "is_self_orthogonal",
    "iter_codeword_chunks",
    "minimum_distance",
    "same_codewords",
    "weight_distribution",
]
