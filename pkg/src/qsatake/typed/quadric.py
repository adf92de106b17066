"""Even-dimensional quadrics Q^(2n-2) through the cyclic element of so(2n).

Schubert basis labels: "s0", ..., "s{n-2}", the two rulings "s{n-1}+" and
"s{n-1}-", then "s{n}", ..., "s{2n-2}".  The hyperplane class is "s1" and
deg q = 2n - 2.

The spectrum of x_q is the set of (2n-2)-th roots of (-1)^n 4q together with
two kernel vectors f_{0+}, f_{0-}.  Classes become functions on that set; the
matrix of eigenvectors, weighted by the idempotent normalisations, equals
the signed permutation taking Schubert classes to the standard basis.

Since zeta^(2n-2) = (-1)^n 4q, the parameter q of x_q is (-1)^n times the
usual quantum parameter: the point class takes the value (-1)^n q at every
nonzero zeta, and h * s{2n-3} = s{2n-2} + (-1)^n q s0.
"""

from __future__ import annotations

import cmath
from typing import Dict, List, Tuple

import numpy as np

from ..classes import ONE, ZERO, ClassVector, add_term, qpow
from .somatrix import evaluate, mat_mul, pos, xq_matrix


def _check_n(n: int) -> None:
    # for n = 2 the two kernel vectors coincide with eigenvectors of the
    # chain and the eigenvector basis degenerates
    if n < 3:
        raise ValueError("quadric calculus needs n >= 3 (got %d)" % n)


def quadric_basis(n: int) -> List[str]:
    _check_n(n)
    out = ["s%d" % k for k in range(n - 1)]
    out += ["s%d+" % (n - 1), "s%d-" % (n - 1)]
    out += ["s%d" % k for k in range(n, 2 * n - 1)]
    return out


def class_degree(label: str) -> int:
    return int(label[1:].rstrip("+-"))


def quadric_xq(n: int):
    _check_n(n)
    return xq_matrix(n)


# ---------------------------------------------------------------- spectrum


def quadric_points(n: int, q_value: complex = 1.0) -> Dict[str, complex]:
    """Spectrum points: "z0", ..., "z{2n-3}" (nonzero eigenvalues), "0+", "0-"."""
    _check_n(n)
    m = 2 * n - 2
    c = (-1) ** n * 4 * q_value
    r, th = abs(c) ** (1.0 / m), cmath.phase(c)
    pts = {"z%d" % k: r * cmath.exp(1j * (th + 2 * cmath.pi * k) / m) for k in range(m)}
    pts["0+"] = 0j
    pts["0-"] = 0j
    return pts


def zeta_eigenvector(z: complex, n: int) -> np.ndarray:
    """f_zeta = sum_j z^j e_-(n-j) + z^(n-1)/2 e_-1 - 2 sum_k (-z)^-(n-k) e_k - e_n."""
    v = np.zeros(2 * n, dtype=complex)
    for j in range(n - 1):
        v[pos(-n + j, n)] = z ** j
    v[pos(-1, n)] = 0.5 * z ** (n - 1)
    for k in range(1, n):
        v[pos(k, n)] = -2 * (-z) ** (-(n - k))
    v[pos(n, n)] = -1
    return v


def kernel_vector(sign: int, n: int, q_value: complex = 1.0) -> np.ndarray:
    """f_{0+-} = q e_-1 - e_1 +- q^(1/2) (e_n + e_-n)."""
    v = np.zeros(2 * n, dtype=complex)
    root = cmath.sqrt(q_value)
    v[pos(-1, n)] += q_value
    v[pos(1, n)] += -1
    v[pos(n, n)] += sign * root
    v[pos(-n, n)] += sign * root
    return v


def eigenvector(n: int, point: str, q_value: complex = 1.0) -> np.ndarray:
    """f_zeta or f_{0+-} for a point label of quadric_points."""
    if point in ("0+", "0-"):
        return kernel_vector(1 if point == "0+" else -1, n, q_value)
    return zeta_eigenvector(quadric_points(n, q_value)[point], n)


def _schubert_value(label: str, n: int, point: str, z: complex, root: complex, q_value) -> complex:
    k = class_degree(label)
    top = (-1) ** n * q_value
    if point in ("0+", "0-"):
        s = 1 if point == "0+" else -1
        if label.endswith("+"):
            return s * root
        if label.endswith("-"):
            return -s * root
        if k == 0:
            return 1.0
        if k == 2 * n - 2:
            return -top
        return 0.0
    if k <= n - 2:
        return z ** k
    if k == 2 * n - 2:
        return top
    return 0.5 * z ** k


def quadric_spectral(cls: ClassVector, n: int, q_value: complex = 1.0) -> Dict[str, complex]:
    """Spectral function of a class vector (label -> polynomial in q)."""
    if q_value == 0:
        raise ValueError("q_value must be nonzero")
    pts = quadric_points(n, q_value)
    root = cmath.sqrt(q_value)
    out = {p: 0j for p in pts}
    for label, coeff in cls.items():
        c = complex(coeff(q_value))
        for p, z in pts.items():
            out[p] += c * _schubert_value(label, n, p, z, root, q_value)
    return out


def spectral_matrix(n: int, q_value: complex = 1.0) -> np.ndarray:
    """Rows: Schubert classes in basis order; columns: spectrum points."""
    basis = quadric_basis(n)
    pts = list(quadric_points(n, q_value))
    return np.array([[quadric_spectral({b: ONE}, n, q_value)[p] for p in pts] for b in basis])


def _round_graded(x: np.ndarray, basis: List[str], degree: int, n: int, q_value) -> Tuple[ClassVector, float]:
    out: ClassVector = {}
    worst = 0.0
    step = 2 * n - 2
    for label, val in zip(basis, x):
        gap = degree - class_degree(label)
        if gap < 0 or gap % step:
            worst = max(worst, abs(val))
            continue
        k = gap // step
        c = val / q_value ** k
        r = round(c.real)
        worst = max(worst, abs(c - r))
        if r:
            add_term(out, label, qpow(k, r))
    return out, worst


def _homogeneous_parts(cls: ClassVector, n: int) -> Dict[int, ClassVector]:
    parts: Dict[int, ClassVector] = {}
    step = 2 * n - 2
    for label, coeff in cls.items():
        for k, a in enumerate(coeff.coeffs):
            if a:
                d = class_degree(label) + step * k
                add_term(parts.setdefault(d, {}), label, qpow(k, a))
    return parts


def quadric_qproduct(c1: ClassVector, c2: ClassVector, n: int, q_value: complex = 1.0,
                     tol: float = 1e-6, return_residual: bool = False):
    """Quantum product by pointwise multiplication of spectral functions.

    Each homogeneous piece is re-expanded by solving against the spectral
    matrix and rounded onto the lattice Z q^k (k fixed by the grading).
    """
    if q_value == 0:
        raise ValueError("q_value must be nonzero")
    basis = quadric_basis(n)
    S = spectral_matrix(n, q_value)
    cond = np.linalg.cond(S)
    if cond > 1e10:
        raise ArithmeticError("spectral matrix ill-conditioned (cond=%.3g)" % cond)
    out: ClassVector = {}
    worst = 0.0
    pts = list(quadric_points(n, q_value))
    for d1, p1 in _homogeneous_parts(c1, n).items():
        f1 = quadric_spectral(p1, n, q_value)
        for d2, p2 in _homogeneous_parts(c2, n).items():
            f2 = quadric_spectral(p2, n, q_value)
            values = np.array([f1[p] * f2[p] for p in pts])
            x = np.linalg.solve(S.T, values)
            piece, res = _round_graded(x, basis, d1 + d2, n, q_value)
            worst = max(worst, res)
            for label, c in piece.items():
                add_term(out, label, c)
    if worst > tol:
        raise ArithmeticError("lattice rounding residual %.3g exceeds %.1g" % (worst, tol))
    return (out, worst) if return_residual else out


# ---------------------------------------------------------------- Satake


def schubert_vectors(n: int):
    """Image of each Schubert class in C^(2n) (exact, at q = 0).

    s_k = x^k e_-1 for k <= n-2, the rulings go to e_-n and -e_n, and
    s_k = x^k e_-1 / 2 for k >= n.  Returns basis-ordered columns.
    """
    basis = quadric_basis(n)
    X0 = [[c.coeffs[0] if c else 0 for c in row] for row in quadric_xq(n)]
    X0 = [[ONE * c if c else ZERO for c in row] for row in X0]
    v = [[ZERO] for _ in range(2 * n)]
    v[pos(-1, n)] = [ONE]
    powers = [v]
    for _ in range(2 * n - 2):
        powers.append(mat_mul(X0, powers[-1]))
    cols = {}
    for label in basis:
        k = class_degree(label)
        if label.endswith("+"):
            col = [ONE if i == pos(-n, n) else ZERO for i in range(2 * n)]
        elif label.endswith("-"):
            col = [-ONE if i == pos(n, n) else ZERO for i in range(2 * n)]
        elif k <= n - 2:
            col = [r[0] for r in powers[k]]
        else:
            col = [r[0] / 2 for r in powers[k]]
        cols[label] = col
    return cols


def transport_matrix(n: int):
    """2n x 2n exact matrix whose columns are the Schubert vectors."""
    cols = schubert_vectors(n)
    basis = quadric_basis(n)
    return [[cols[b][i] for b in basis] for i in range(2 * n)]


def quadric_satake_inverse_check(n: int, q_value: complex = 1.0) -> float:
    """Max residual of F^-1 = diag(d) S^T T^-1 (and of F diag(d) S^T = T).

    F has the eigenvectors as columns, S is the spectral matrix of the
    Schubert classes, T the Schubert-to-standard signed permutation, and
    d the idempotent weights zeta^-(n-1) / (2n-2) and 1/4 at the kernel.
    """
    pts = quadric_points(n, q_value)
    F = np.column_stack([eigenvector(n, p, q_value) for p in pts])
    d = np.array([z ** (-(n - 1)) / (2 * n - 2) if p.startswith("z") else 0.25 for p, z in pts.items()])
    S = spectral_matrix(n, q_value)
    T = evaluate(transport_matrix(n), q_value).real
    if not np.allclose(np.abs(T).sum(axis=0), 1) or not np.allclose(np.abs(T).sum(axis=1), 1):
        raise AssertionError("Schubert vectors are not a signed permutation")
    r1 = np.max(np.abs(np.linalg.inv(F) - np.diag(d) @ S.T @ T.T))
    r2 = np.max(np.abs(F @ np.diag(d) @ S.T - T))
    return float(max(r1, r2))


def quadric_hyperplane_matrix(n: int):
    """Exact matrix of s1 * (.) in the Schubert basis, obtained as T^-1 x_q T."""
    T = transport_matrix(n)
    Tinv = [list(r) for r in zip(*T)]  # signed permutation
    return mat_mul(Tinv, mat_mul(quadric_xq(n), T))


def quadric_eigenvector_check(n: int, q_value: complex = 1.0) -> float:
    X = evaluate(quadric_xq(n), q_value)
    worst = 0.0
    for p, z in quadric_points(n, q_value).items():
        f = eigenvector(n, p, q_value)
        worst = max(worst, float(np.max(np.abs(X @ f - z * f))))
    return worst
