"""
amdesigns package initialization.

Exact-arithmetic tools for linear codes over small prime fields: weight data,
support designs, the Assmus–Mattson condition, harmonic weight enumerators and
the binomial-sum criteria for designs that gain one level of strength.
"""
__version__ = "0.1.0"
