"""Pfaffians of principal minors of skew-symmetric matrices."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence


def _is_zero(x, tol):
    if tol is None:
        return not x
    return abs(x) <= tol


def check_skew(A, tol=None) -> None:
    n = len(A)
    for i in range(n):
        if len(A[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(i, n):
            if not _is_zero(A[i][j] + A[j][i], tol):
                raise ValueError("matrix is not skew-symmetric at (%d, %d)" % (i, j))


def pfaffian_minor(A, rows: Sequence[int] = None, tol=None):
    """Pfaffian of the principal submatrix of A on ``rows``.

    Expansion runs along the first selected row.  The empty selection has
    Pfaffian 1 and Pf([[0, a], [-a, 0]]) = a.  ``tol`` switches the skew
    check to a numeric tolerance for floating point input.
    """
    check_skew(A, tol)
    idx = tuple(range(len(A))) if rows is None else tuple(rows)
    if len(idx) % 2:
        raise ValueError("Pfaffian needs an even number of rows, got %d" % len(idx))
    if len(set(idx)) != len(idx):
        return A[0][0] * 0 if A else 0

    one = 1

    @lru_cache(maxsize=None)
    def pf(sel):
        if not sel:
            return one
        i = sel[0]
        total = None
        for k in range(1, len(sel)):
            j = sel[k]
            a = A[i][j]
            if _is_zero(a, None if tol is None else 0):
                continue
            term = a * pf(sel[1:k] + sel[k + 1:])
            if (k - 1) % 2:
                term = -term
            total = term if total is None else total + term
        return total if total is not None else A[i][i] * 0

    return pf(idx)


def pfaffian(A, tol=None):
    return pfaffian_minor(A, None, tol)
