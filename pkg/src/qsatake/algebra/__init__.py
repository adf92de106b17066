"""Exact arithmetic: polynomials, rational functions, elimination, Pfaffians, Ore operators."""

from .poly import Poly, poly_gcd, factor_string, rational_roots
from .ratfunc import RatFunc
from .linalg import row_echelon, rank, nullspace, solve, det, minimal_dependence
from .pfaffian import pfaffian, pfaffian_minor
from .ore import OreOperator, left_strip, ore_left_strip

__all__ = [
    "Poly", "poly_gcd", "factor_string", "rational_roots", "RatFunc",
    "row_echelon", "rank", "nullspace", "solve", "det", "minimal_dependence",
    "pfaffian", "pfaffian_minor", "OreOperator", "left_strip", "ore_left_strip",
]
