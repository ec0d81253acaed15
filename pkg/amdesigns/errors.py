"""Exception hierarchy shared by every amdesigns module."""

from __future__ import annotations


class AMDesignsError(RuntimeError):
    """Base error raised for analysis failures."""


class FieldError(AMDesignsError):
    """Raised for unsupported moduli or mixed-field arithmetic."""


class CodeError(AMDesignsError):
    """Raised when a generator matrix does not describe a usable code."""


class BudgetExceeded(AMDesignsError):
    """Raised when a code has more codewords than the enumeration budget allows."""

    def __init__(self, size: int, budget: int) -> None:
        super().__init__(
            f"code has {size} codewords, enumeration budget is {budget} (raise --budget to continue)"
        )
        self.size = size
        self.budget = budget


class EmptyWeight(AMDesignsError):
    """Raised when a support design is requested for a weight with no codewords."""

    def __init__(self, weight: int) -> None:
        super().__init__(f"no codewords of weight {weight}")
        self.weight = weight


class NotApplicable(AMDesignsError):
    """Raised when the hypotheses of an analysis do not hold for the code."""


class WrongCase(AMDesignsError):
    """Raised when d^⊥ − t falls outside the cases the binomial criteria cover."""


class SizeCapExceeded(AMDesignsError):
    """Raised when a harmonic space is larger than the configured caps."""


class DimensionMismatch(AMDesignsError):
    """Raised when a function and a code live on different point sets."""


class NonIntegerCoefficient(AMDesignsError):
    """Raised when a MacWilliams transform does not produce a valid enumerator."""


class DegenerateDenominator(AMDesignsError):
    """Raised when the three-weight criterion would divide by d_3 − d_2 = 0."""


class ReportFormatError(AMDesignsError):
    """Raised when a serialized report does not follow the versioned schema."""


class CodeFileError(AMDesignsError):
    """Base error for generator-matrix files."""


class MalformedHeader(CodeFileError):
    """Raised when the ``q n k`` header or the row layout is invalid."""


class BadDigit(CodeFileError):
    """Raised for a matrix entry that is not a residue modulo q."""

    def __init__(self, line: int, col: int, char: str, modulus: int) -> None:
        super().__init__(f"line {line}, column {col}: {char!r} is not a digit below {modulus}")
        self.line = line
        self.col = col
        self.char = char


class RankDeficient(CodeFileError):
    """Raised when the generator rows are linearly dependent."""

    def __init__(self, rank: int, expected: int) -> None:
        super().__init__(f"generator rows are dependent: rank {rank}, expected {expected}")
        self.rank = rank
        self.expected = expected


__all__ = [
    "AMDesignsError",
    "BadDigit",
    "BudgetExceeded",
    "CodeError",
    "CodeFileError",
    "DegenerateDenominator",
    "DimensionMismatch",
    "EmptyWeight",
    "FieldError",
    "MalformedHeader",
    "NonIntegerCoefficient",
    "NotApplicable",
    "RankDeficient",
    "ReportFormatError",
    "SizeCapExceeded",
    "WrongCase",
]
