"""Linear codes, weight enumerators and the built-in Golay codes."""

from .enumerators import (
    WeightDistribution,
    WeightEnumerator,
    dual_distribution,
    macwilliams_dual_enumerator,
)
from .golay import (
    build_fixture,
    construct_dual_golay,
    construct_extended_golay,
    construct_golay,
    list_available_fixtures,
)
from .linear import (
    LinearCode,
    codewords_of_weight,
    dual,
    enumerate_codewords,
    extend_with_parity,
    is_self_orthogonal,
    minimum_distance,
    same_codewords,
    weight_distribution,
)

__all__ = [
    "LinearCode",
    "WeightDistribution",
    "WeightEnumerator",
    "build_fixture",
    "codewords_of_weight",
    "construct_dual_golay",
    "construct_extended_golay",
    "construct_golay",
    "dual",
    "dual_distribution",
    "enumerate_codewords",
    "extend_with_parity",
    "is_self_orthogonal",
    "list_available_fixtures",
    "macwilliams_dual_enumerator",
    "minimum_distance",
    "same_codewords",
    "weight_distribution",
]
