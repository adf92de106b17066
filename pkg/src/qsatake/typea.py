"""Quantum cohomology of the Grassmannian G(a, b) of a-planes in C^(a+b).

Schubert classes are indexed by partitions in the a x b box (a rows, b
columns); h_r is the class of the one-row partition (r).  The ring is
Lambda_a[q] / (h_{b+1}, ..., h_{n-1}, h_n - (-1)^(a-1) q) with n = a + b.

Products by power sums are computed three ways: the border-rim rule,
quantum Pieri applied to the h-expansion, and the derivation action of
the cyclic element on the wedge power.  A fourth, independent route
reduces products modulo the ideal directly.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .algebra.linalg import row_echelon
from .classes import ONE, Q, ZERO, ClassVector, add_term, combine, qpow
from .symfun.characters import mn_character, z_mu
from .symfun.partitions import (
    Partition, add_border_rims, conjugate, horizontal_strips, in_box, normalize,
    partitions_in_box, partitions_of, remove_border_rims,
)
from .symfun.symfunc import SymFunc, schur_eval, schur_in_h


@dataclass(frozen=True)
class Grassmannian:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("G(a, b) needs a, b >= 1")

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def dim(self) -> int:
        return self.a * self.b

    def basis(self) -> List[Partition]:
        return partitions_in_box(self.a, self.b)

    def contains(self, lam) -> bool:
        return in_box(lam, self.a, self.b)

    def check(self, lam) -> Partition:
        lam = normalize(lam)
        if not self.contains(lam):
            raise ValueError("%s does not fit in the %dx%d box" % (lam, self.a, self.b))
        return lam

    @property
    def wrap_sign(self) -> int:
        """h_n = wrap_sign * q in the quantum ring."""
        return -1 if (self.a - 1) % 2 else 1

    def transpose(self) -> "Grassmannian":
        return Grassmannian(self.b, self.a)

    def __str__(self):
        return "G(%d,%d)" % (self.a, self.b)


# ---------------------------------------------------------------- Pieri


def _pieri_h(G: Grassmannian, r: int, lam: Partition) -> ClassVector:
    out: ClassVector = {}
    for mu in horizontal_strips(lam, r, max_rows=G.a, max_cols=G.b):
        add_term(out, mu, ONE)
    # quantum part: |nu| = |lam| + r - n, lam_i - 1 >= nu_i >= lam_{i+1} - 1
    target = sum(lam) + r - G.n
    if target >= 0 and len(lam) == G.a:
        lp = list(lam) + [0]
        hi = [lp[i] - 1 for i in range(G.a)]
        lo = [max(lp[i + 1] - 1, 0) for i in range(G.a)]

        def rec(i, left, acc):
            if i == G.a:
                if left == 0:
                    yield normalize(acc)
                return
            for v in range(min(hi[i], left), lo[i] - 1, -1):
                yield from rec(i + 1, left - v, acc + [v])

        for nu in rec(0, target, []):
            add_term(out, nu, Q)
    return out


def quantum_pieri(kind: str, r: int, lam: Sequence[int], G: Grassmannian) -> ClassVector:
    """h_r * sigma_lam or e_r * sigma_lam in QH*(G(a, b))."""
    lam = G.check(lam)
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return {lam: ONE}
    if kind == "h":
        if r > G.b:
            raise ValueError("h_%d needs r <= b = %d" % (r, G.b))
        return _pieri_h(G, r, lam)
    if kind == "e":
        if r > G.a:
            raise ValueError("e_%d needs r <= a = %d" % (r, G.a))
        # G(a, b) and G(b, a) have isomorphic quantum rings, sigma_lam <-> sigma_lam'
        dual = _pieri_h(G.transpose(), r, conjugate(lam))
        return {conjugate(mu): c for mu, c in dual.items()}
    raise ValueError("kind must be 'h' or 'e'")


def _apply(fn, vec: ClassVector) -> ClassVector:
    out: ClassVector = {}
    for lam, c in vec.items():
        for mu, d in fn(lam).items():
            add_term(out, mu, c * d)
    return out


def mult_h(G: Grassmannian, k: int, vec: ClassVector) -> ClassVector:
    """h_k * vec for any k >= 0, using the relations of the quantum ring."""
    if k == 0:
        return dict(vec)
    if k <= G.b:
        return _apply(lambda lam: quantum_pieri("h", k, lam, G), vec)
    if k < G.n:
        return {}
    if k == G.n:
        return combine((Q * G.wrap_sign, vec))
    # h_k = sum_{i=1}^{a} (-1)^(i-1) e_i h_{k-i}
    out: ClassVector = {}
    for i in range(1, G.a + 1):
        term = mult_e(G, i, mult_h(G, k - i, vec))
        out = combine((ONE, out), (ONE if i % 2 else -ONE, term))
    return out


def mult_e(G: Grassmannian, k: int, vec: ClassVector) -> ClassVector:
    if k == 0:
        return dict(vec)
    if k > G.a:
        return {}
    return _apply(lambda lam: quantum_pieri("e", k, lam, G), vec)


def q_multiply_symfunc(f: SymFunc, lam: Sequence[int], G: Grassmannian) -> ClassVector:
    """Image of f in QH*(G) times sigma_lam, by iterated quantum Pieri."""
    lam = G.check(lam)
    f = f.to_basis("h")
    out: ClassVector = {}
    base = {lam: ONE}
    for mono, c in f.terms.items():
        vec = base
        for k in sorted(mono):
            vec = mult_h(G, k, vec)
            if not vec:
                break
        out = combine((ONE, out), (c, vec))
    return out


def schubert_product(lam, mu, G: Grassmannian) -> ClassVector:
    return q_multiply_symfunc(schur_in_h(G.check(lam)), mu, G)


# ---------------------------------------------------------------- rim rule


def power_sum_rim_product(ell: int, lam: Sequence[int], G: Grassmannian) -> ClassVector:
    """p_ell * sigma_lam: add ell-rims inside the box, remove (n - ell)-rims times q."""
    lam = G.check(lam)
    if not 1 <= ell <= G.n - 1:
        raise ValueError("need 1 <= ell <= n - 1")
    out: ClassVector = {}
    for mu, ht in add_border_rims(lam, ell, (G.a, G.b)):
        add_term(out, mu, (-1) ** ht)
    for nu, ht in remove_border_rims(lam, G.n - ell):
        add_term(out, nu, Q * (G.wrap_sign * (-1) ** ht))
    return out


# ---------------------------------------------------------------- wedge model


def wedge_indices(lam: Sequence[int], a: int) -> Tuple[int, ...]:
    """e_lam = e_{lam_1 + a} ^ e_{lam_2 + a - 1} ^ ... ^ e_{lam_a + 1}."""
    p = list(lam) + [0] * (a - len(lam))
    return tuple(p[i] + a - i for i in range(a))


def partition_of_indices(ks: Sequence[int], a: int) -> Partition:
    ks = sorted(ks, reverse=True)
    return normalize([ks[i] - (a - i) for i in range(a)])


def _sort_sign(seq: List[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sign of the permutation sorting seq into decreasing order; 0 on repeats."""
    if len(set(seq)) != len(seq):
        return 0, ()
    s = list(seq)
    sign = 1
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] < s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
    return sign, tuple(s)


def shift_image(k: int, ell: int, n: int, wrap) -> Tuple[int, object]:
    """Image of e_k under the ell-th power of e_k -> e_{k+1}, e_n -> wrap e_1."""
    t = k + ell
    factor = ONE
    while t > n:
        t -= n
        factor = factor * wrap
    return t, factor


def wedge_xq_power(ell: int, vec: ClassVector, G: Grassmannian, wrap=None) -> ClassVector:
    """Derivation action of x_q^ell on a combination of wedge basis vectors e_lam.

    x_q raises indices, e_k -> e_{k+1}, and sends e_n to (-1)^(a-1) q e_1;
    the ell-th power is applied to one wedge factor at a time.
    """
    if wrap is None:
        wrap = Q * G.wrap_sign
    out: ClassVector = {}
    for lam, c in vec.items():
        ks = list(wedge_indices(lam, G.a))
        for i in range(G.a):
            t, factor = shift_image(ks[i], ell, G.n, wrap)
            new = ks[:i] + [t] + ks[i + 1:]
            sign, sorted_ks = _sort_sign(new)
            if sign:
                add_term(out, partition_of_indices(sorted_ks, G.a), c * factor * sign)
    return out


def wedge_classical_power(ell: int, vec: ClassVector, G: Grassmannian) -> ClassVector:
    """Same action at q = 0: indices pushed past n are killed."""
    out: ClassVector = {}
    for lam, c in vec.items():
        ks = list(wedge_indices(lam, G.a))
        for i in range(G.a):
            t = ks[i] + ell
            if t > G.n:
                continue
            sign, sorted_ks = _sort_sign(ks[:i] + [t] + ks[i + 1:])
            if sign:
                add_term(out, partition_of_indices(sorted_ks, G.a), c * sign)
    return out


def lr_by_composed_actions(lam, mu, G: Grassmannian) -> ClassVector:
    """Classical sigma_lam * sigma_mu from sigma_lam = sum_rho chi^lam_rho p_rho / z_rho,
    with p_rho acting as the composite of the classical wedge actions of x^rho_i."""
    lam, mu = G.check(lam), G.check(mu)
    out: ClassVector = {}
    for rho in partitions_of(sum(lam)):
        chi = mn_character(lam, rho)
        if not chi:
            continue
        vec: ClassVector = {mu: ONE}
        for part in rho:
            vec = wedge_classical_power(part, vec, G)
            if not vec:
                break
        out = combine((ONE, out), (Fraction(chi, z_mu(rho)), vec))
    return out


# ---------------------------------------------------------------- ideal reduction oracle


def _classical_h_times_schur(k: int, nu: Partition, rows: int) -> List[Partition]:
    return list(horizontal_strips(nu, k, max_rows=rows))


def _schur_expand_h_monomial(mono, lam: Partition, rows: int) -> Dict[Partition, Fraction]:
    vec = {lam: Fraction(1)}
    for k in sorted(mono):
        new: Dict[Partition, Fraction] = {}
        for nu, c in vec.items():
            for mu in _classical_h_times_schur(k, nu, rows):
                new[mu] = new.get(mu, 0) + c
        vec = {m: c for m, c in new.items() if c}
    return vec


def ideal_reduce(f: SymFunc, lam: Sequence[int], G: Grassmannian) -> ClassVector:
    """f * s_lam reduced modulo (h_{b+1}, ..., h_{n-1}, h_n - wrap_sign q).

    Works in the graded piece of Lambda_a[q] spanned by q^m s_mu
    (at most a rows), using only classical Pieri and linear algebra.
    """
    lam = G.check(lam)
    f = f.to_basis("h")
    if not f.is_homogeneous():
        out: ClassVector = {}
        by_deg: Dict[int, Dict] = {}
        for mono, c in f.terms.items():
            by_deg.setdefault(sum(mono), {})[mono] = c
        for terms in by_deg.values():
            out = combine((ONE, out), (ONE, ideal_reduce(SymFunc(terms, "h"), lam, G)))
        return out
    if not f:
        return {}
    a, b, n = G.a, G.b, G.n
    D = f.degree() + sum(lam)
    cols = [(m, mu) for m in range(D // n + 1) for mu in partitions_of(D - n * m) if len(mu) <= a]
    index = {c: i for i, c in enumerate(cols)}
    rows = []
    gens = [(k, Fraction(0)) for k in range(b + 1, n)] + [(n, Fraction(G.wrap_sign))]
    for k, qc in gens:
        for m in range(0, (D - k) // n + 1):
            for nu in partitions_of(D - k - n * m):
                if len(nu) > a:
                    continue
                row = [Fraction(0)] * len(cols)
                for mu in _classical_h_times_schur(k, nu, a):
                    row[index[(m, mu)]] += 1
                if qc:
                    row[index[(m + 1, nu)]] -= qc
                if any(row):
                    rows.append(row)
    target = [Fraction(0)] * len(cols)
    for mono, c in f.terms.items():
        for mu, v in _schur_expand_h_monomial(mono, lam, a).items():
            target[index[(0, mu)]] += c * v
    outside = [i for i, (m, mu) in enumerate(cols) if mu and mu[0] > b]
    inside = [i for i in range(len(cols)) if i not in set(outside)]
    if rows:
        R, pivots = row_echelon(rows, outside + inside)
        for r, col in pivots:
            if col in set(outside) and target[col]:
                fct = target[col]
                target = [x - fct * y for x, y in zip(target, R[r])]
    if any(target[i] for i in outside):
        raise ArithmeticError("ideal reduction left classes outside the box")
    out: ClassVector = {}
    for i in inside:
        if target[i]:
            m, mu = cols[i]
            add_term(out, mu, qpow(m, target[i]))
    return out


# ---------------------------------------------------------------- matrices and spectra


def hyperplane_matrix(G: Grassmannian) -> List[List]:
    """Matrix of h_1 * (.) in the Schubert basis; column j is the image of basis[j]."""
    basis = G.basis()
    idx = {lam: i for i, lam in enumerate(basis)}
    M = [[ZERO] * len(basis) for _ in basis]
    for j, lam in enumerate(basis):
        for mu, c in quantum_pieri("h", 1, lam, G).items():
            M[idx[mu]][j] = c
    return M


def numeric_matrix(M, q_value: complex) -> np.ndarray:
    return np.array([[complex(c(q_value)) if c else 0j for c in row] for row in M], dtype=complex)


def roots_of_q(n: int, q_value: complex) -> List[complex]:
    r = abs(q_value) ** (1.0 / n)
    th = cmath.phase(q_value)
    return [r * cmath.exp(1j * (th + 2 * cmath.pi * k) / n) for k in range(n)]


def spectrum(G: Grassmannian, q_value: complex = 1.0) -> List[Tuple[complex, ...]]:
    """Unordered a-subsets of the n-th roots of q (as index-sorted tuples)."""
    rts = roots_of_q(G.n, q_value)
    return [tuple(rts[i] for i in c) for c in combinations(range(G.n), G.a)]


def satake_basis_change_check(G: Grassmannian, q_value: complex = 1.0) -> float:
    """Max residual of e_lam = sum_zeta s_lam(zeta) V(zeta) f_zeta1 ^ ... ^ f_zeta_a.

    Here f_z = (1/n) sum_k z^(-(k-1)) e_k is the eigenvector of the raising
    cyclic element for the eigenvalue z, and V is the Vandermonde product.
    """
    n, a = G.n, G.a
    basis = G.basis()
    rows = {lam: i for i, lam in enumerate(basis)}
    worst = 0.0
    target = np.zeros((len(basis), len(basis)), dtype=complex)
    for zeta in spectrum(G, q_value):
        F = np.array([[z ** (-(k - 1)) / n for z in zeta] for k in range(1, n + 1)])
        vand = 1
        for i in range(a):
            for j in range(i + 1, a):
                vand *= zeta[i] - zeta[j]
        for lam in basis:
            s = schur_eval(lam, zeta)
            for mu in basis:
                ms = wedge_indices(mu, a)
                coef = np.linalg.det(F[[k - 1 for k in ms], :])
                target[rows[mu], rows[lam]] += s * vand * coef
    residual = target - np.eye(len(basis))
    worst = float(np.max(np.abs(residual)))
    return worst


def semisimplicity_report(G: Grassmannian, q_value: complex = 1.0) -> dict:
    M = numeric_matrix(hyperplane_matrix(G), q_value)
    return eigen_report(M)


def eigen_report(M: np.ndarray) -> dict:
    """Eigenvalue gap data and a numerical diagonalizability test."""
    vals, vecs = np.linalg.eig(M)
    gaps = [abs(vals[i] - vals[j]) for i in range(len(vals)) for j in range(i + 1, len(vals))]
    min_gap = min(gaps) if gaps else float("inf")
    cond = float(np.linalg.cond(vecs)) if len(vals) else 1.0
    # minimal polynomial square-free <=> product over distinct eigenvalues kills M
    distinct = []
    for v in vals:
        if all(abs(v - w) > 1e-6 for w in distinct):
            distinct.append(v)
    P = np.eye(len(M), dtype=complex)
    scale = 1.0
    for v in distinct:
        A = M - v * np.eye(len(M))
        P = P @ A
        scale *= max(float(np.linalg.norm(A, 2)), 1e-300)
    return {
        "eigenvalues": vals,
        "min_gap": float(min_gap),
        "distinct": len(distinct),
        "size": len(vals),
        "diagonalizable_residual": float(np.max(np.abs(P))) / scale,
        "eigvec_condition": cond,
    }
