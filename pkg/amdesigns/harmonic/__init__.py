"""Harmonic spaces, harmonic weight enumerators and their dual transform."""

from .enumerator import (
    HarmonicEnumerator,
    Proportionality,
    dual_transform,
    harmonic_design_check,
    harmonic_enumerator,
    proportionality,
)
from .relations import RelationReport, solve_five_weight_relations
from .spaces import HarmonicFunction, colex_subsets, down_operator, harm_basis

__all__ = [
    "HarmonicEnumerator",
    "HarmonicFunction",
    "Proportionality",
    "RelationReport",
    "colex_subsets",
    "down_operator",
    "dual_transform",
    "harm_basis",
    "harmonic_design_check",
    "harmonic_enumerator",
    "proportionality",
    "solve_five_weight_relations",
]
