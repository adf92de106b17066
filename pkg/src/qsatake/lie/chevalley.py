"""Chevalley basis with the inductive sign convention, realised on a faithful
minuscule module.

X_{+-alpha_i} are the simple root vectors of the module.  For ht(beta) >= 2,
with i maximal (in rs.chevalley_order) such that beta - alpha_i is a root,

    X_beta  = [X_{alpha_i},  X_{beta - alpha_i}],
    X_-beta = [X_{-alpha_i}, X_{-(beta - alpha_i)}],

and H_i = [X_{alpha_i}, X_{-alpha_i}].  Lie algebra elements are dicts from
labels (a root tuple, or ("H", i)) to rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, List, Tuple

import numpy as np

from ..algebra.linalg import row_echelon, solve
from .minuscule import MinusculeModule
from .roots import Root, RootSystem, height, neg, sub

Element = Dict[Hashable, Fraction]


def _add_into(out: Element, label, c) -> None:
    v = out.get(label, 0) + c
    if v:
        out[label] = Fraction(v)
    else:
        out.pop(label, None)


class ChevalleyBasis:
    def __init__(self, module: MinusculeModule):
        self.module = module
        self.rs: RootSystem = module.rs
        rs = self.rs
        X: Dict[Hashable, np.ndarray] = {}
        for beta in rs.positive:
            if height(beta) == 1:
                i = beta.index(1) + 1
                X[beta] = module.E[i]
                X[neg(beta)] = module.F[i]
                continue
            cands = [j for j in range(1, rs.rank + 1) if rs.is_root(sub(beta, rs.simple(j)))]
            i = max(cands, key=rs.chevalley_rank)
            rest = sub(beta, rs.simple(i))
            X[beta] = _br(module.E[i], X[rest])
            X[neg(beta)] = _br(module.F[i], X[neg(rest)])
        for i in range(1, rs.rank + 1):
            X[("H", i)] = module.H[i]
        self.X = X
        self.labels: List[Hashable] = (
            list(rs.positive) + [neg(b) for b in rs.positive] + [("H", i) for i in range(1, rs.rank + 1)]
        )
        # an entry (row, col) at which each root vector is nonzero
        self._probe = {}
        for lab in self.labels:
            if isinstance(lab, tuple) and lab and lab[0] == "H":
                continue
            nz = np.argwhere(X[lab])
            if not len(nz):
                raise AssertionError("root vector %s acts by zero" % (lab,))
            self._probe[lab] = tuple(nz[0])
        self._diag_rows = self._pick_diag_rows()

    def _pick_diag_rows(self) -> List[int]:
        r = self.rs.rank
        rows = [[Fraction(int(self.X[("H", i)][k, k])) for i in range(1, r + 1)] for k in range(self.module.dim)]
        R, piv = row_echelon([list(col) for col in zip(*rows)])
        cols = [c for _, c in piv]
        if len(cols) < r:
            raise AssertionError("Cartan subalgebra does not act faithfully")
        return cols

    @property
    def dim(self) -> int:
        return len(self.labels)

    def scaled_matrix(self, elem: Element) -> Tuple[np.ndarray, int]:
        """(M, d) with integer M and matrix(elem) = M / d."""
        d = 1
        for c in elem.values():
            d = d * Fraction(c).denominator // gcd(d, Fraction(c).denominator)
        N = self.module.dim
        M = np.zeros((N, N), dtype=np.int64)
        for lab, c in elem.items():
            M += self.X[lab] * int(Fraction(c) * d)
        return M, d

    def matrix(self, elem: Element) -> np.ndarray:
        M, d = self.scaled_matrix(elem)
        if d == 1:
            return M
        return M.astype(object) * Fraction(1, d)

    def coordinates(self, M: np.ndarray, denom: int = 1) -> Element:
        """Express the module matrix M / denom in the basis; raises if it is
        not in the span."""
        out: Element = {}
        for lab, (r, c) in self._probe.items():
            v = int(M[r, c])
            if v:
                out[lab] = Fraction(v, int(self.X[lab][r, c]) * denom)
        rest = M * 1
        for lab, c in out.items():
            rest -= self.X[lab] * int(c * denom)
        rows = self._diag_rows
        A = [[Fraction(int(self.X[("H", i)][k, k])) for i in range(1, self.rs.rank + 1)] for k in rows]
        b = [Fraction(int(rest[k, k]), denom) for k in rows]
        x = solve(A, b)
        for i, c in enumerate(x, start=1):
            if c:
                out[("H", i)] = c
                rest -= self.X[("H", i)] * int(c * denom)
        if np.any(rest):
            raise ValueError("matrix is not in the Lie algebra")
        return out

    def bracket(self, u: Element, v: Element) -> Element:
        A, a = self.scaled_matrix(u)
        B, b = self.scaled_matrix(v)
        return self.coordinates(_br(A, B), a * b)

    def basis_element(self, label) -> Element:
        return {label: Fraction(1)}

    def principal_nilpotent(self, sign: int = 1) -> Element:
        """x = sum X_{alpha_i} (sign=+1) or sum X_{-alpha_i} (sign=-1)."""
        return {(self.rs.simple(i) if sign > 0 else neg(self.rs.simple(i))): Fraction(1)
                for i in range(1, self.rs.rank + 1)}

    def structure_constant(self, a: Root, b: Root) -> int:
        """N_{a,b} with [X_a, X_b] = N_{a,b} X_{a+b} (0 if a+b is not a root)."""
        s = tuple(x + y for x, y in zip(a, b))
        out = self.bracket(self.basis_element(a), self.basis_element(b))
        if not self.rs.is_root(s):
            return 0
        return int(out.get(s, 0))


def _br(A, B):
    return A @ B - B @ A


def chevalley_basis(module: MinusculeModule) -> ChevalleyBasis:
    return ChevalleyBasis(module)


def chevalley_bracket(basis: ChevalleyBasis, u: Element, v: Element) -> Element:
    return basis.bracket(u, v)
