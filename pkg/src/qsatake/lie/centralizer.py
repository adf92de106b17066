"""Centralizer of the principal nilpotent and the special classes p_d.

We work with the lowering element x = sum X_{-alpha_i}, so that y_d is a
combination of X_{-beta} over roots beta of height d and y_d(e_omega) lands
on the weights of depth d below the highest weight.  Printed formulas name
X_beta for the positive root; the same coefficients are read on X_{-beta}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..algebra.linalg import nullspace, solve
from .chevalley import ChevalleyBasis, Element, chevalley_basis
from .minuscule import MinusculeModule, Weight, minuscule_module
from .reference import P_PRINTED, Y_PRINTED
from .roots import Root, build_root_system, height, neg, parse_root


@dataclass
class CentralizerElement:
    d: int
    coeffs: Dict[Root, Fraction]  # positive beta -> coefficient of X_{-beta}
    z: Optional[Dict[Root, Fraction]] = None  # positive gamma -> coefficient of X_gamma
    scalar: Optional[Fraction] = None  # computed = scalar * printed, when printed exists

    def element(self) -> Element:
        out = {neg(b): c for b, c in self.coeffs.items()}
        return out

    def q_part(self) -> Element:
        return dict(self.z or {})


def _flatten(M: np.ndarray) -> np.ndarray:
    return M.reshape(-1)


def _solve_kernel(columns: List[np.ndarray]) -> List[List[Fraction]]:
    """Rational basis of {c : sum c_k columns[k] = 0} for integer columns."""
    if not columns:
        return []
    A = np.stack(columns, axis=1)
    A = A[np.any(A != 0, axis=1)]
    if not len(A):
        return [[Fraction(int(i == k)) for i in range(len(columns))] for k in range(len(columns))]
    A = np.unique(A, axis=0)
    rows = [[Fraction(int(v)) for v in row] for row in A]
    return nullspace(rows)


def degree_kernel(basis: ChevalleyBasis, d: int) -> List[Dict[Root, Fraction]]:
    """Basis of {y in span X_{-beta}, ht beta = d : [x, y] = 0}."""
    roots = basis.rs.roots_of_height(d)
    X, _ = basis.scaled_matrix(basis.principal_nilpotent(-1))
    cols = [_flatten(X @ basis.X[neg(b)] - basis.X[neg(b)] @ X) for b in roots]
    return [{b: c for b, c in zip(roots, vec) if c} for vec in _solve_kernel(cols)]


def exponent_profile(basis: ChevalleyBasis) -> Dict[int, int]:
    """d -> dim of the height-d part of the centralizer of x."""
    h = basis.rs.coxeter_number
    return {d: len(degree_kernel(basis, d)) for d in range(1, h)}


def printed_y(name: str, d: int, rs) -> Optional[Dict[Root, Fraction]]:
    """Printed y_d as positive root -> coefficient; None when there is no
    printed form or one of its terms is not a root of height d."""
    table = Y_PRINTED.get(name, {})
    if d not in table:
        return None
    out: Dict[Root, Fraction] = {}
    for c, expr in table[d]:
        try:
            b = parse_root(expr, rs)
        except ValueError:
            return None
        if height(b) != d:
            return None
        out[b] = out.get(b, 0) + Fraction(c)
    return out


def invalid_printed_terms(name: str) -> List[Tuple[int, str]]:
    rs = build_root_system(name)
    bad = []
    for d, terms in Y_PRINTED.get(name, {}).items():
        for _, expr in terms:
            try:
                b = parse_root(expr, rs)
            except ValueError:
                bad.append((d, expr))
                continue
            if height(b) != d:
                bad.append((d, expr))
    return bad


def proportionality(a: Dict, b: Dict) -> Optional[Fraction]:
    """s with a = s * b, or None."""
    if set(a) != set(b) or not b:
        return None
    k = next(iter(b))
    s = Fraction(a[k]) / Fraction(b[k])
    if all(Fraction(a[x]) == s * Fraction(b[x]) for x in b):
        return s
    return None


def _content_normalize(v: Dict[Root, Fraction]) -> Dict[Root, Fraction]:
    from math import gcd, lcm

    den = 1
    for c in v.values():
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in v.values()]
    g = 0
    for i in ints:
        g = gcd(g, i)
    lead = v[min(v)]
    s = Fraction(den, g) * (1 if lead > 0 else -1)
    return {k: c * s for k, c in v.items()}


def centralizer_basis(basis: ChevalleyBasis) -> List[CentralizerElement]:
    """One element per exponent, solved height by height.  Where a printed
    form exists the element is rescaled to it; ``scalar`` records the factor
    between the raw kernel vector and the printed one."""
    out = []
    rs = basis.rs
    for d in range(1, rs.coxeter_number):
        for vec in degree_kernel(basis, d):
            raw = _content_normalize(vec)
            ref = printed_y(rs.name, d, rs)
            s = proportionality(raw, ref) if ref is not None else None
            if s is not None:
                out.append(CentralizerElement(d, ref, scalar=s))
            else:
                out.append(CentralizerElement(d, raw))
    return out


def centralizer_q_basis(basis: ChevalleyBasis) -> List[CentralizerElement]:
    """Extend each y_d to y_d + q z_d commuting with x_q = x + q X_psi.

    The q^1 part of [x_q, y_d + q z_d] = 0 reads [x, z_d] = -[X_psi, y_d] with
    z_d supported on positive roots of height h - d; the q^2 part vanishes
    because psi + gamma is never a root.
    """
    rs = basis.rs
    h = rs.coxeter_number
    psi = rs.highest_root
    X, _ = basis.scaled_matrix(basis.principal_nilpotent(-1))
    Xpsi = basis.X[psi]
    out = []
    for y in centralizer_basis(basis):
        Y, dy = basis.scaled_matrix(y.element())
        rhs = -(Xpsi @ Y - Y @ Xpsi)
        support = rs.roots_of_height(h - y.d)
        cols = [_flatten(X @ basis.X[g] - basis.X[g] @ X) * dy for g in support]
        target = _flatten(rhs)
        keep = np.any(np.stack(cols + [target], axis=1) != 0, axis=1) if cols else target != 0
        A = [[Fraction(int(c[k])) for c in cols] for k in np.nonzero(keep)[0]]
        b = [Fraction(int(target[k])) for k in np.nonzero(keep)[0]]
        if not cols:
            if any(b):
                raise ArithmeticError("no q-correction for y_%d" % y.d)
            z = {}
        else:
            sol = solve(A, b)
            if sol is None:
                raise ArithmeticError("no q-correction for y_%d" % y.d)
            z = {g: c for g, c in zip(support, sol) if c}
        out.append(CentralizerElement(y.d, y.coeffs, z=z, scalar=y.scalar))
    return out


def x_q_element(basis: ChevalleyBasis, q=1) -> Element:
    x = basis.principal_nilpotent(-1)
    x[basis.rs.highest_root] = Fraction(q)
    return x


def ad_matrix(basis: ChevalleyBasis, elem: Element) -> np.ndarray:
    """Matrix of ad(elem) on the Lie algebra in basis.labels order (numeric)."""
    idx = {lab: k for k, lab in enumerate(basis.labels)}
    M = np.zeros((basis.dim, basis.dim))
    for j, lab in enumerate(basis.labels):
        for k, c in basis.bracket(elem, {lab: Fraction(1)}).items():
            M[idx[k], j] = float(c)
    return M


def centralizer_dimension(basis: ChevalleyBasis, elem: Element) -> int:
    M = ad_matrix(basis, elem)
    return basis.dim - int(np.linalg.matrix_rank(M))


# ---------------------------------------------------------------- special classes


def apply_to_highest(module: MinusculeModule, basis: ChevalleyBasis, y: CentralizerElement) -> Dict[Weight, Fraction]:
    Y, d = basis.scaled_matrix(y.element())
    col = Y[:, 0]
    return {module.weights[k]: Fraction(int(v), d) for k, v in enumerate(col) if v}


def p_class_coefficients(module: MinusculeModule, y: CentralizerElement, basis: Optional[ChevalleyBasis] = None) -> Dict[str, Fraction]:
    """y(e_omega) in the weight basis, labelled by reduced words."""
    basis = basis or chevalley_basis(module)
    return {module.word(w): c for w, c in apply_to_highest(module, basis, y).items()}


def printed_p(module: MinusculeModule, d: int) -> Optional[Dict[Weight, Fraction]]:
    table = P_PRINTED.get(module.rs.name, {})
    if d not in table:
        return None
    return {module.weight_of_word(w): Fraction(c) for c, w in table[d]}


@dataclass
class SpecialClassReport:
    d: int
    computed: Dict[str, Fraction]
    printed: Optional[Dict[str, Fraction]]
    scalar: Optional[Fraction]  # computed = scalar * printed
    y: CentralizerElement = field(repr=False)
    note: str = ""

    @property
    def matches(self) -> bool:
        return self.scalar is not None


def special_classes(name: str) -> List[SpecialClassReport]:
    rs = build_root_system(name)
    module = minuscule_module(rs, 1)
    basis = chevalley_basis(module)
    out = []
    for y in centralizer_basis(basis):
        got = apply_to_highest(module, basis, y)
        ref = printed_p(module, y.d)
        scalar = proportionality(got, ref) if ref is not None else None
        words_ref = None
        notes = []
        if ref is not None:
            words_ref = {w: Fraction(c) for c, w in P_PRINTED[name][y.d]}
            short = sorted(w for w in words_ref if len(w) != y.d)
            if short:
                notes.append("printed word(s) %s have length != %d" % (", ".join(short), y.d))
        if y.d in Y_PRINTED.get(name, {}) and printed_y(name, y.d, rs) is None:
            notes.append("printed y_%d has a term that is not a root of height %d" % (y.d, y.d))
        out.append(SpecialClassReport(y.d, {module.word(w): c for w, c in got.items()}, words_ref, scalar, y, "; ".join(notes)))
    return out


def cyclic_span_dimension(module: MinusculeModule, basis: ChevalleyBasis) -> int:
    X, _ = basis.scaled_matrix(basis.principal_nilpotent(-1))
    v = np.zeros(module.dim)
    v[0] = 1
    vecs = []
    for _ in range(module.dim):
        vecs.append(v.copy())
        v = X @ v
    return int(np.linalg.matrix_rank(np.array(vecs)))


def jordan_type(module: MinusculeModule, basis: ChevalleyBasis) -> List[int]:
    """Block sizes of the nilpotent x on the module, from ranks of powers."""
    X, _ = basis.scaled_matrix(basis.principal_nilpotent(-1))
    X = X.astype(float)
    n = module.dim
    ranks = [n]
    P = np.eye(n)
    while ranks[-1] > 0:
        P = P @ X
        ranks.append(int(np.linalg.matrix_rank(P)))
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least), 0, -1):
        nxt = at_least[k] if k < len(at_least) else 0
        sizes += [k] * (at_least[k - 1] - nxt)
    return sizes
