"""Matrices in so(2n) on the ordered basis e_-n, ..., e_-1, e_1, ..., e_n.

The quadratic form pairs e_i with e_-i, so a matrix lies in so(2n) exactly
when it is skew-symmetric with respect to the antidiagonal.
"""

from __future__ import annotations

from typing import List

import numpy as np

from ..classes import ONE, Q, ZERO, qpoly


def labels(n: int) -> List[int]:
    return [-k for k in range(n, 0, -1)] + list(range(1, n + 1))


def pos(k: int, n: int) -> int:
    """Row/column index of e_k."""
    if k == 0 or abs(k) > n:
        raise ValueError("no basis vector e_%d for n=%d" % (k, n))
    return n + k if k < 0 else n - 1 + k


def zero_matrix(n: int):
    return [[ZERO] * (2 * n) for _ in range(2 * n)]


def is_antidiagonal_skew(X) -> bool:
    N = len(X)
    return all(X[i][j] == -X[N - 1 - j][N - 1 - i] for i in range(N) for j in range(N))


def mat_mul(A, B):
    N, K, M = len(A), len(B), len(B[0])
    out = [[ZERO] * M for _ in range(N)]
    for i in range(N):
        for k in range(K):
            a = A[i][k]
            if not a:
                continue
            row = B[k]
            for j in range(M):
                if row[j]:
                    out[i][j] = out[i][j] + a * row[j]
    return out


def mat_pow(A, k: int):
    N = len(A)
    out = [[ONE if i == j else ZERO for j in range(N)] for i in range(N)]
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def bracket(A, B):
    AB, BA = mat_mul(A, B), mat_mul(B, A)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(AB, BA)]


def evaluate(X, q_value) -> np.ndarray:
    return np.array([[complex(c(q_value)) if c else 0j for c in row] for row in X], dtype=complex)


def xq_matrix(n: int):
    """The cyclic element x_q: e_-k -> e_-(k+1) along the E_- chain, the
    E_+ chain with signs -1, and the q / corner entries that close the cycle."""
    if n < 2:
        raise ValueError("need n >= 2")
    X = zero_matrix(n)
    for i in range(n - 1):
        X[i][i + 1] = ONE
    for j in range(n, 2 * n - 1):
        X[j][j + 1] = -ONE
    X[n - 2][n] = X[n - 2][n] + Q
    X[n - 1][n + 1] = X[n - 1][n + 1] - Q
    X[2 * n - 2][0] = X[2 * n - 2][0] + ONE
    X[2 * n - 1][1] = X[2 * n - 1][1] - ONE
    return X


def yq_matrix(n: int):
    """y_q(v) = (v_-n + v_n)(q e_-1 - e_1) + (v_-1 - q v_1)(e_-n + e_n)."""
    Y = zero_matrix(n)

    def put(row, col, c):
        i, j = pos(row, n), pos(col, n)
        Y[i][j] = Y[i][j] + qpoly(c)

    for src in (-n, n):
        put(-1, src, Q)
        put(1, src, -ONE)
    for src, c in ((-1, ONE), (1, -Q)):
        put(-n, src, c)
        put(n, src, c)
    return Y
