"""Exact Gaussian elimination over any field whose elements support
+, -, *, / and truth testing (Fraction, RatFunc, ...)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm as ilcm
from typing import List, Optional, Sequence

from .poly import Poly, poly_gcd
from .ratfunc import RatFunc


def row_echelon(rows: Sequence[Sequence], pivot_order: Optional[Sequence[int]] = None):
    """Reduced row echelon form.

    Returns (R, pivots) with pivots a list of (row, column).  Columns are
    searched in ``pivot_order`` when given, which lets callers eliminate a
    chosen set of columns first.
    """
    R = [list(r) for r in rows]
    if not R:
        return R, []
    ncols = len(R[0])
    order = list(pivot_order) if pivot_order is not None else list(range(ncols))
    pivots = []
    r = 0
    for col in order:
        pr = next((i for i in range(r, len(R)) if R[i][col]), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = 1 / R[r][col]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][col]:
                f = R[i][col]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append((r, col))
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(rows) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows, zero=Fraction(0), one=Fraction(1)) -> List[list]:
    """Basis of {v : rows * v = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    R, pivots = row_echelon(rows)
    pcols = {c: r for r, c in pivots}
    basis = []
    for free in range(ncols):
        if free in pcols:
            continue
        v = [zero] * ncols
        v[free] = one
        for c, r in pcols.items():
            v[c] = -R[r][free]
        basis.append(v)
    return basis


def solve(A, b):
    """One solution x of A x = b, or None when inconsistent."""
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    ncols = len(A[0])
    R, pivots = row_echelon(aug, list(range(ncols)))
    zero = b[0] - b[0]
    x = [zero] * ncols
    for r, c in pivots:
        x[c] = R[r][-1]
    for i, row in enumerate(R):
        if all(not v for v in row[:-1]) and row[-1]:
            return None
    return x


def det(M):
    """Determinant by elimination (field entries)."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return Fraction(1)
    d = A[0][0] - A[0][0] + 1
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return A[0][0] - A[0][0]
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d = d * A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return d


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), start=row[0] * 0) for col in Bt] for row in A]


def _clear_ratfunc(coeffs: List[RatFunc]) -> List[Poly]:
    var = next((c.var for c in coeffs if c), "t")
    den = Poly([1], var)
    for c in coeffs:
        den = den * (c.den // poly_gcd(den, c.den))
    polys = [(c.num * (den // c.den)) if c else Poly((), var) for c in coeffs]
    g = poly_gcd(*[p for p in polys if p])
    polys = [p // g for p in polys]
    raw = [a for p in polys for a in p.coeffs]
    flat = _clear_rational(raw)
    k = next(i for i, a in enumerate(raw) if a)
    scale = flat[k] / raw[k]
    lead = next(p for p in reversed(polys) if p)
    if lead.lc * scale < 0:
        scale = -scale
    return [p * scale for p in polys]


def _clear_rational(coeffs: List[Fraction]) -> List[Fraction]:
    den = 1
    for c in coeffs:
        den = ilcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    lead = next(v for v in reversed(ints) if v)
    s = 1 if lead > 0 else -1
    return [Fraction(v // (g * s)) for v in ints]


def minimal_dependence(vectors):
    """First linear dependence among v0, v1, ..., vk with k minimal.

    Returns the coefficient list [c0, ..., ck] (sum ci vi = 0) with
    denominators cleared and common factors removed, or the string
    "independent".  Entries may be Fractions or RatFuncs; for RatFunc
    input the coefficients are coprime polynomials.
    """
    if not vectors:
        raise ValueError("minimal_dependence needs at least one vector")
    dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise ValueError("vectors must share one dimension")
    sample = next((x for v in vectors for x in v if x), Fraction(0))
    zero = sample - sample
    one = zero + 1
    # echelon rows: (vector, combination, pivot)
    basis = []
    for k, v in enumerate(vectors):
        w = list(v)
        comb = [zero] * (k + 1)
        comb[k] = one
        for bv, bc, piv in basis:
            f = w[piv]
            if f:
                w = [a - f * b for a, b in zip(w, bv)]
                comb = [a - f * (bc[i] if i < len(bc) else zero) for i, a in enumerate(comb)]
        piv = next((i for i, x in enumerate(w) if x), None)
        if piv is None:
            if isinstance(sample, RatFunc):
                return _clear_ratfunc(comb)
            return _clear_rational(comb)
        inv = 1 / w[piv]
        basis.append(([x * inv for x in w], [c * inv for c in comb], piv))
    return "independent"
