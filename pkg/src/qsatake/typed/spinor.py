"""Spinor varieties OG(n, 2n) through the half-spin representation.

The half-spin module is Lambda^even E_+ with basis e_S, S an even subset of
{1, ..., n} (increasing wedge order).  The Clifford algebra acts by
c(e_i) = wedge with e_i and c(e_-i) = contraction with e_i^*, and X in so(2n)
acts by  rho(X) = 1/4 sum_a [c(X b_a), c(b^a)]  over the basis b_a with
dual basis b^a = e_-a.

Schubert classes tau_lam (lam strict, parts < n) correspond to

    tau_lam  <->  eps(lam) e_S,   S = {n + 1 - m : m in mu},

where mu = lam + 1 with a part 1 appended when lam has odd length, and
eps(lam) = (-1)^(|lam| + l + l(l-1)/2), l = len(lam).  With this gauge the
action of x_q is the quantum Chevalley operator with nonnegative entries.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.pfaffian import pfaffian_minor
from ..classes import ONE, ZERO, ClassVector, add_term, qpoly, qpow
from ..symfun.partitions import normalize, strict_complement, strict_partitions
from ..symfun.ptilde import ptilde_eval, ptilde_matrix_values
from ..symfun.symfunc import elementary_values, schur_eval
from .quadric import kernel_vector, zeta_eigenvector
from .somatrix import is_antidiagonal_skew, labels, mat_pow, pos, xq_matrix, yq_matrix

Subset = Tuple[int, ...]
SpinVector = Dict[Subset, object]


def spin_basis(n: int) -> List[Subset]:
    return [S for k in range(0, n + 1, 2) for S in combinations(range(1, n + 1), k)]


# ---------------------------------------------------------------- Clifford action


def _clifford(k: int, S: Subset) -> Optional[Tuple[int, Subset]]:
    """c(e_k) applied to e_S: wedge for k > 0, contraction for k < 0."""
    i = abs(k)
    sign = -1 if sum(1 for s in S if s < i) % 2 else 1
    if k > 0:
        if i in S:
            return None
        return sign, tuple(sorted(S + (i,)))
    if i not in S:
        return None
    return sign, tuple(s for s in S if s != i)


def _pair(k: int, l: int, S: Subset) -> Optional[Tuple[int, Subset]]:
    """c(e_k) c(e_l) e_S."""
    r = _clifford(l, S)
    if r is None:
        return None
    s1, T = r
    r = _clifford(k, T)
    if r is None:
        return None
    return s1 * r[0], r[1]


class SpinOperator:
    """Sparse endomorphism of Lambda^even E_+; cols[S] = {T: coefficient}."""

    def __init__(self, n: int, cols: Dict[Subset, Dict[Subset, object]]):
        self.n = n
        self.cols = cols

    def __call__(self, vec: SpinVector) -> SpinVector:
        out: SpinVector = {}
        for S, a in vec.items():
            for T, c in self.cols.get(S, {}).items():
                add_term(out, T, qpoly(a) * c)
        return out

    def matrix(self, q_value, basis: Optional[List[Subset]] = None) -> np.ndarray:
        basis = basis or spin_basis(self.n)
        idx = {S: i for i, S in enumerate(basis)}
        M = np.zeros((len(basis), len(basis)), dtype=complex)
        for S, col in self.cols.items():
            for T, c in col.items():
                M[idx[T], idx[S]] = complex(c(q_value))
        return M

    def compose(self, other: "SpinOperator") -> "SpinOperator":
        cols = {S: self({T: c for T, c in col.items()}) for S, col in other.cols.items()}
        return SpinOperator(self.n, {S: c for S, c in cols.items() if c})

    def __sub__(self, other: "SpinOperator") -> "SpinOperator":
        cols: Dict[Subset, Dict[Subset, object]] = {}
        for S in set(self.cols) | set(other.cols):
            col = dict(self.cols.get(S, {}))
            for T, c in other.cols.get(S, {}).items():
                add_term(col, T, -c)
            if col:
                cols[S] = col
        return SpinOperator(self.n, cols)

    def __eq__(self, other):
        return isinstance(other, SpinOperator) and not (self - other).cols

    def __hash__(self):  # pragma: no cover - operators are not used as keys
        raise TypeError("unhashable SpinOperator")


def spin_action(X, n: Optional[int] = None) -> SpinOperator:
    """rho(X) on Lambda^even E_+ for X in so(2n) (entries polynomials in q)."""
    n = n or len(X) // 2
    if len(X) != 2 * n or not is_antidiagonal_skew(X):
        raise ValueError("matrix is not in so(%d)" % (2 * n))
    labs = labels(n)
    entries = []
    for a in labs:
        j = pos(a, n)
        for l in labs:
            c = X[pos(l, n)][j]
            if c:
                entries.append((l, -a, qpoly(c) / 4))
    cols: Dict[Subset, Dict[Subset, object]] = {}
    for S in spin_basis(n):
        col: Dict[Subset, object] = {}
        for l, a, c in entries:
            for k1, k2, sgn in ((l, a, 1), (a, l, -1)):
                r = _pair(k1, k2, S)
                if r is not None:
                    add_term(col, r[1], c * (sgn * r[0]))
        if col:
            cols[S] = col
    return SpinOperator(n, cols)


# ---------------------------------------------------------------- Schubert labels


def gauge(lam: Sequence[int]) -> int:
    l = len(lam)
    return -1 if (sum(lam) + l + l * (l - 1) // 2) % 2 else 1


def schubert_basis(n: int) -> List[Tuple[int, ...]]:
    return strict_partitions(n)


def check_strict(lam: Sequence[int], n: int) -> Tuple[int, ...]:
    lam = normalize(lam)
    if any(a <= b for a, b in zip(lam, lam[1:])) or (lam and lam[0] >= n):
        raise ValueError("%s is not a strict partition with parts < %d" % (lam, n))
    return lam


def shifted_parts(lam: Sequence[int]) -> Tuple[int, ...]:
    """mu = lam + 1, padded with a part 1 to even length."""
    mu = [p + 1 for p in lam]
    if len(mu) % 2:
        mu.append(1)
    return tuple(mu)


def schubert_subset(lam: Sequence[int], n: int) -> Subset:
    return tuple(sorted(n + 1 - m for m in shifted_parts(lam)))


def subset_schubert(S: Subset, n: int) -> Tuple[int, ...]:
    mu = sorted((n + 1 - s for s in S), reverse=True)
    return tuple(m - 1 for m in mu if m > 1)


def to_spin(cls: ClassVector, n: int) -> SpinVector:
    out: SpinVector = {}
    for lam, c in cls.items():
        lam = check_strict(lam, n)
        add_term(out, schubert_subset(lam, n), qpoly(c) * gauge(lam))
    return out


def from_spin(vec: SpinVector, n: int) -> ClassVector:
    out: ClassVector = {}
    for S, c in vec.items():
        lam = subset_schubert(S, n)
        add_term(out, lam, qpoly(c) * gauge(lam))
    return out


def spinor_hyperplane_matrix(n: int):
    """Matrix of tau_1 * (.) in the Schubert basis (column j = image of basis[j])."""
    rho = spin_action(xq_matrix(n), n)
    basis = schubert_basis(n)
    idx = {lam: i for i, lam in enumerate(basis)}
    M = [[ZERO] * len(basis) for _ in basis]
    for j, lam in enumerate(basis):
        for mu, c in from_spin(rho(to_spin({lam: ONE}, n)), n).items():
            M[idx[mu]][j] = c
    return M


# ---------------------------------------------------------------- Lie-action products


@lru_cache(maxsize=None)
def _power_action(n: int, k: int) -> SpinOperator:
    return spin_action(mat_pow(xq_matrix(n), k), n)


def spinor_power_product(r: int, lam: Sequence[int], n: int) -> ClassVector:
    """p_{2r-1} * tau_lam as the action of the matrix power x_q^(2r-1)."""
    if r < 1 or 2 * r - 1 > 2 * n - 3:
        raise ValueError("need 1 <= 2r-1 <= 2n-3")
    lam = check_strict(lam, n)
    return from_spin(_power_action(n, 2 * r - 1)(to_spin({lam: ONE}, n)), n)


def y_scalar(n: int) -> int:
    """tau_{n-1} * (.) = y_scalar(n) rho(y_q) in the gauge above."""
    return 1 if n % 2 else -1


@lru_cache(maxsize=None)
def _y_action(n: int) -> SpinOperator:
    return spin_action(yq_matrix(n), n)


def tau_top_formula(lam: Sequence[int], n: int) -> ClassVector:
    """tau_{n-1} tau_lam = tau_(n-1, lam) + q tau_(lam minus its part n-1)."""
    lam = check_strict(lam, n)
    if lam and lam[0] == n - 1:
        return {lam[1:]: qpoly(qpow(1))}
    return {(n - 1,) + lam: ONE}


def tau_top_by_action(lam: Sequence[int], n: int) -> ClassVector:
    lam = check_strict(lam, n)
    out = from_spin(_y_action(n)(to_spin({lam: ONE}, n)), n)
    return {k: v * y_scalar(n) for k, v in out.items()}


def spinor_tau_top_product(lam: Sequence[int], n: int) -> ClassVector:
    """tau_{n-1} * tau_lam, computed by the y_q action and checked against the
    two-term formula."""
    by_action = tau_top_by_action(lam, n)
    by_formula = tau_top_formula(lam, n)
    if by_action != by_formula:
        raise ArithmeticError("y_q action disagrees with the two-term formula for %s" % (lam,))
    return by_formula


# ---------------------------------------------------------------- spectrum


def spinor_spectrum(n: int, q_value: complex = 1.0) -> List[Tuple[complex, ...]]:
    """All (zeta_1..zeta_{n-1}) with zeta_i^2 the distinct (n-1)-th roots of (-1)^n 4q."""
    if n < 2:
        raise ValueError("need n >= 2")
    c = (-1) ** n * 4 * q_value
    r, th = abs(c) ** (1.0 / (n - 1)), cmath.phase(c)
    sq = [cmath.sqrt(r * cmath.exp(1j * (th + 2 * cmath.pi * k) / (n - 1))) for k in range(n - 1)]
    return [tuple(s * z for s, z in zip(signs, sq)) for signs in product((1, -1), repeat=n - 1)]


def spectrum_sign(zeta: Sequence[complex], n: int, q_value: complex = 1.0) -> int:
    """epsilon with zeta_1 ... zeta_{n-1} = (-1)^n 2 epsilon q^(1/2)."""
    ratio = np.prod(zeta) / ((-1) ** n * 2 * cmath.sqrt(q_value))
    eps = int(round(ratio.real))
    if abs(ratio - eps) > 1e-8:
        raise ValueError("zeta does not lie on the spectrum")
    return eps


def normalizer(zeta: Sequence[complex]) -> complex:
    """c(zeta) = prod zeta_i prod_{j<k} (zeta_j + zeta_k)."""
    out = complex(np.prod(zeta))
    for j in range(len(zeta)):
        for k in range(j + 1, len(zeta)):
            out *= zeta[j] + zeta[k]
    return out


def ptilde_values(zeta: Sequence[complex], n: int) -> Dict[Tuple[int, ...], complex]:
    table = ptilde_matrix_values(zeta, n)
    return {lam: ptilde_eval(lam, zeta, table) for lam in schubert_basis(n)}


def spectral_function(cls: ClassVector, n: int, q_value: complex = 1.0) -> List[complex]:
    """Values of sum c_lam tau_lam over spinor_spectrum(n, q_value)."""
    out = []
    for zeta in spinor_spectrum(n, q_value):
        vals = ptilde_values(zeta, n)
        out.append(sum(complex(c(q_value)) * vals[check_strict(lam, n)] for lam, c in cls.items()))
    return out


def power_sum_spectral(k: int, n: int, q_value: complex = 1.0) -> List[complex]:
    """The function p_k on the spectrum: half the k-th power sum of zeta."""
    return [0.5 * sum(z ** k for z in zeta) for zeta in spinor_spectrum(n, q_value)]


def re_expand(values: Sequence[complex], n: int, q_value: complex = 1.0):
    """Coefficients a_nu with values = sum_nu a_nu P~_nu, by orthogonality:
    a_nu = sum_zeta f(zeta) P~_{nu^c}(zeta) / c(zeta)."""
    coeffs = {nu: 0j for nu in schubert_basis(n)}
    for f, zeta in zip(values, spinor_spectrum(n, q_value)):
        vals = ptilde_values(zeta, n)
        c = normalizer(zeta)
        for nu in coeffs:
            coeffs[nu] += f * vals[strict_complement(nu, n)] / c
    return coeffs


def round_graded(coeffs, degree: int, n: int, q_value: complex = 1.0) -> Tuple[ClassVector, float]:
    """Round a_nu onto Z q^k with k = (degree - |nu|) / (2n - 2)."""
    out: ClassVector = {}
    worst = 0.0
    step = 2 * n - 2
    for nu, a in coeffs.items():
        gap = degree - sum(nu)
        if gap < 0 or gap % step:
            worst = max(worst, abs(a))
            continue
        k = gap // step
        c = a / q_value ** k
        r = round(c.real)
        worst = max(worst, abs(c - r))
        if r:
            add_term(out, nu, qpow(k, r))
    return out, worst


def spinor_spectral_product(lam: Sequence[int], mu: Sequence[int], n: int, q_value: complex = 1.0,
                            tol: float = 1e-6, return_residual: bool = False):
    lam, mu = check_strict(lam, n), check_strict(mu, n)
    f = [a * b for a, b in zip(spectral_function({lam: ONE}, n, q_value), spectral_function({mu: ONE}, n, q_value))]
    out, worst = round_graded(re_expand(f, n, q_value), sum(lam) + sum(mu), n, q_value)
    if worst > tol:
        raise ArithmeticError("lattice rounding residual %.3g exceeds %.1g" % (worst, tol))
    return (out, worst) if return_residual else out


def power_sum_spectral_product(r: int, lam: Sequence[int], n: int, q_value: complex = 1.0,
                               tol: float = 1e-6, return_residual: bool = False):
    lam = check_strict(lam, n)
    k = 2 * r - 1
    f = [a * b for a, b in zip(power_sum_spectral(k, n, q_value), spectral_function({lam: ONE}, n, q_value))]
    out, worst = round_graded(re_expand(f, n, q_value), k + sum(lam), n, q_value)
    if worst > tol:
        raise ArithmeticError("lattice rounding residual %.3g exceeds %.1g" % (worst, tol))
    return (out, worst) if return_residual else out


# ---------------------------------------------------------------- u(zeta) and weight vectors


def _eigen_rows(zeta: Sequence[complex], n: int, q_value: complex) -> np.ndarray:
    rows = [zeta_eigenvector(z, n) for z in zeta]
    # the family of E_- is reached with the kernel vector of opposite sign
    rows.append(kernel_vector(-spectrum_sign(zeta, n, q_value), n, q_value))
    return np.array(rows)


def u_direct(zeta: Sequence[complex], n: int, q_value: complex = 1.0) -> np.ndarray:
    """u = A_-^-1 A_+ from the eigenvector rows, in the sign convention where
    v_F = sum_S Pf_S(u) e_S."""
    R = _eigen_rows(zeta, n, q_value)
    A_minus = R[:, :n][:, ::-1]  # columns e_-1, ..., e_-n
    A_plus = R[:, n:]
    u = np.linalg.solve(A_minus, A_plus)
    D = np.diag([(-1) ** k for k in range(1, n + 1)])
    return D @ u @ D


def _hook(k: int, j: int, zeta) -> complex:
    """s_{k, 1^j}(zeta); zero outside the hook range."""
    if k <= 0 or j < 0:
        return 0j
    return schur_eval((k,) + (1,) * j, zeta)


def u_formula(zeta: Sequence[complex], n: int) -> np.ndarray:
    """Hook-Schur expression: 4 u_ij = s_{j-1,1^(i-1)} - s_{j,1^(i-2)} off the
    first row/column, u_1j = e_{j-1}(zeta) / 2, skew, zero diagonal."""
    U = np.zeros((n, n), dtype=complex)
    ev = elementary_values(zeta, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if i == 1:
                U[0, j - 1] = ev[j - 1] / 2 if j - 1 < len(ev) else 0
            elif j == 1:
                U[i - 1, 0] = -(ev[i - 1] / 2 if i - 1 < len(ev) else 0)
            else:
                U[i - 1, j - 1] = (_hook(j - 1, i - 1, zeta) - _hook(j, i - 2, zeta)) / 4
    return U


def u_matrix(zeta: Sequence[complex], n: int, q_value: complex = 1.0, tol: float = 1e-8) -> np.ndarray:
    U = u_formula(zeta, n)
    direct = u_direct(zeta, n, q_value)
    scale = max(1.0, float(np.max(np.abs(direct))))
    err = float(np.max(np.abs(U - direct))) / scale
    if err > tol:
        raise ArithmeticError("u(zeta) paths disagree by %.3g" % err)
    return U


def spinor_weight_vector(zeta: Sequence[complex], n: int, q_value: complex = 1.0) -> Dict[Subset, complex]:
    """v_F(zeta) = sum_S Pf_S(u) e_S over even subsets S of {1..n}.

    The coefficient of e_S equals P~_{S-1}(zeta).  In the Clifford basis used
    by spin_action the same line has coordinates clifford_sign(S) Pf_S(u).
    """
    U = u_matrix(zeta, n, q_value)
    tol = 1e-9 * max(1.0, float(np.max(np.abs(U))))
    out = {}
    for S in spin_basis(n):
        idx = [s - 1 for s in S]
        out[S] = complex(pfaffian_minor(U, idx, tol=tol)) if S else 1 + 0j
    return out


def clifford_sign(S: Subset) -> int:
    """Sign relating e_S here to the Clifford basis: wedge order reversed and
    e_k rescaled by (-1)^k."""
    return -1 if (sum(S) + len(S) // 2) % 2 else 1


def weight_vector_in_clifford_basis(zeta, n: int, q_value: complex = 1.0) -> np.ndarray:
    v = spinor_weight_vector(zeta, n, q_value)
    return np.array([clifford_sign(S) * v[S] for S in spin_basis(n)])
