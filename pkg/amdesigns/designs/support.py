"""Support designs of fixed-weight codewords and exact t-design verification."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from ..errors import EmptyWeight
from ..formatting import exact, exact_list
from ..logging.config import get_logger
from ..settings import DEFAULT_BUDGET
from ..codes.linear import LinearCode, codewords_of_weight

LOGGER = get_logger("amdesigns.designs")

Block = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class SupportDesign:
    """Blocks are 1-based sorted supports, one per codeword; repeats are kept."""

    points: int
    block_size: int
    blocks: tuple[Block, ...]
    modulus: int = 3

    def __post_init__(self) -> None:
        for block in self.blocks:
            if len(block) != self.block_size or not all(1 <= x <= self.points for x in block):
                raise ValueError(f"block {block} is not a {self.block_size}-subset of 1..{self.points}")

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def is_complete(self) -> bool:
        """Every w-subset of the points occurs, all equally often."""

        multiplicities = self.multiplicities()
        return len(multiplicities) == comb(self.points, self.block_size) and len(
            set(multiplicities.values())
        ) == 1

    def multiplicities(self) -> Counter[Block]:
        return Counter(self.blocks)

    def pairing_exceptions(self) -> dict[Block, int]:
        """Supports whose multiplicity is not a positive multiple of ``p − 1``.

        Nonzero scalar multiples of a codeword share its support, so over GF(3)
        every multiplicity is expected to be even.
        """

        step = self.modulus - 1
        return {
            block: count for block, count in sorted(self.multiplicities().items()) if count % step
        }

    def to_dict(self) -> dict:
        return {
            "points": exact(self.points),
            "block_size": exact(self.block_size),
            "block_count": exact(self.block_count),
            "distinct_blocks": exact(len(self.multiplicities())),
            "complete": self.is_complete,
        }


Witness = tuple[tuple[Block, int], tuple[Block, int]]


@dataclass(frozen=True, slots=True)
class DesignVerdict:
    t: int
    points: int
    block_size: int
    block_count: int
    is_design: bool
    lambda_value: Fraction | None = None
    witness: Witness | None = None

    @property
    def expected_lambda(self) -> Fraction:
        """``b·C(w,t)/C(n,t)``, the only value a common count could take."""

        return Fraction(self.block_count * comb(self.block_size, self.t), comb(self.points, self.t))

    def to_dict(self) -> dict:
        payload: dict = {
            "t": exact(self.t),
            "weight": exact(self.block_size),
            "blocks": exact(self.block_count),
            "is_design": self.is_design,
        }
        if self.lambda_value is not None:
            payload["lambda"] = exact(self.lambda_value)
        if self.witness is not None:
            (ref, ref_count), (bad, bad_count) = self.witness
            payload["witness"] = {
                "reference": {"subset": exact_list(ref), "count": exact(ref_count)},
                "failing": {"subset": exact_list(bad), "count": exact(bad_count)},
            }
        return payload

    def to_markdown(self) -> str:
        head = f"D_{self.block_size} on {self.points} points ({self.block_count} blocks), t = {self.t}"
        if self.is_design:
            return f"{head}: design with lambda = {exact(self.lambda_value)}"
        (ref, ref_count), (bad, bad_count) = self.witness
        return (
            f"{head}: not a design; {set(ref)} lies in {ref_count} blocks, "
            f"{set(bad)} lies in {bad_count}"
        )


def _supports(words: np.ndarray) -> Iterable[Block]:
    for row in words:
        yield tuple(int(i) + 1 for i in np.flatnonzero(row))


def support_design(
    code: LinearCode, weight: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> SupportDesign:
    """Build ``D_w`` from every codeword of weight ``weight``."""

    if not 1 <= weight <= code.n:
        raise ValueError(f"weight must lie in 1..{code.n}, got {weight}")
    words = codewords_of_weight(code, weight, budget=budget, workers=workers)
    if len(words) == 0:
        raise EmptyWeight(weight)
    return SupportDesign(code.n, weight, tuple(_supports(words)), code.modulus)


def block_subset_counts(blocks: Iterable[Block], t: int) -> Counter[Block]:
    """Number of blocks containing each t-subset that occurs in some block."""

    counts: Counter[Block] = Counter()
    for block in blocks:
        counts.update(combinations(block, t))
    return counts


def is_t_design(design: SupportDesign, t: int) -> DesignVerdict:
    """Count blocks through every t-subset of the points.

    The reference subset is ``{1..t}``; on failure the witness pairs it with
    the lexicographically smallest t-subset whose count differs.
    """

    if not 0 <= t <= design.block_size:
        raise ValueError(f"t must lie in 0..{design.block_size}, got {t}")
    counts = block_subset_counts(design.blocks, t)
    subsets = combinations(range(1, design.points + 1), t)
    reference = next(subsets)
    expected = counts.get(reference, 0)
    for subset in subsets:
        found = counts.get(subset, 0)
        if found != expected:
            LOGGER.debug("D_%s is not a %s-design: %s vs %s", design.block_size, t, reference, subset)
            return DesignVerdict(
                t,
                design.points,
                design.block_size,
                design.block_count,
                False,
                witness=((reference, expected), (subset, found)),
            )
    return DesignVerdict(
        t, design.points, design.block_size, design.block_count, True, Fraction(expected)
    )


__all__ = [
    "Block",
    "DesignVerdict",
    "SupportDesign",
    "block_subset_counts",
    "is_t_design",
    "support_design",
]
