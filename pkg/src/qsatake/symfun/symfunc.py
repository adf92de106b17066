"""Symmetric functions as rational combinations of monomials in h_k or e_k.

A monomial is a weakly decreasing tuple of generator indices, so
(2, 1, 1) in the h basis is h_2 h_1^2.  The canonical basis is h; the e
basis is kept for truncation to finitely many variables (e_i = 0 for
i > number of variables).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple

import numpy as np

from .partitions import normalize

Monomial = Tuple[int, ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b, reverse=True))


class SymFunc:
    __slots__ = ("terms", "basis")

    def __init__(self, terms: Dict[Monomial, object] = None, basis: str = "h"):
        if basis not in ("h", "e"):
            raise ValueError("basis must be 'h' or 'e'")
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                mono = tuple(sorted((k for k in mono if k != 0), reverse=True))
                if any(k < 0 for k in mono):
                    continue
                clean[mono] = clean.get(mono, Fraction(0)) + c
        object.__setattr__(self, "terms", {m: c for m, c in sorted(clean.items()) if c})
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    @classmethod
    def gen(cls, k: int, basis: str = "h") -> "SymFunc":
        if k < 0:
            return cls({}, basis)
        return cls({(k,) if k else (): 1}, basis)

    @classmethod
    def const(cls, c, basis: str = "h") -> "SymFunc":
        return cls({(): c}, basis)

    def _c(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return other.to_basis(self.basis)
        return SymFunc.const(other, self.basis)

    def __add__(self, other):
        o = self._c(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return SymFunc(out, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({m: -c for m, c in self.terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            c = Fraction(other)
            return SymFunc({m: v * c for m, v in self.terms.items()}, self.basis)
        o = other.to_basis(self.basis)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SymFunc(out, self.basis)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return SymFunc({m: v / c for m, v in self.terms.items()}, self.basis)

    def __pow__(self, k: int):
        out = SymFunc.const(1, self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.terms == other.to_basis(self.basis).terms
        try:
            return self.terms == SymFunc.const(other, self.basis).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.basis, tuple(self.to_basis("h").terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def to_basis(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        conv = e_in_h if basis == "h" else h_in_e
        out = SymFunc({}, basis)
        for mono, c in self.terms.items():
            term = SymFunc.const(c, basis)
            for k in mono:
                term = term * conv(k)
            out = out + term
        return out

    def truncate(self, n_vars: int) -> "SymFunc":
        """Set e_i = 0 for i > n_vars (the result is in the e basis)."""
        e = self.to_basis("e")
        return SymFunc({m: c for m, c in e.terms.items() if all(k <= n_vars for k in m)}, "e")

    def evaluate(self, zeta: Sequence[complex]):
        vals = gen_values(zeta, self.basis, max((max(m) for m in self.terms if m), default=0))
        total = 0j
        for mono, c in self.terms.items():
            v = complex(c)
            for k in mono:
                v *= vals[k]
            total += v
        return total

    def __repr__(self):
        return "SymFunc(%s)" % self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), [-k for k in t[0]])):
            mag = abs(c)
            body = "*".join(_mono_str(self.basis, mono)) if mono else ""
            if not body:
                s = str(mag)
            elif mag == 1:
                s = body
            else:
                s = "%s*%s" % (mag, body)
            if not parts:
                parts.append(("-" if c < 0 else "") + s)
            else:
                parts.append(("- " if c < 0 else "+ ") + s)
        return " ".join(parts)


def _mono_str(letter: str, mono: Monomial):
    out = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        e = j - i
        out.append("%s%d" % (letter, mono[i]) + ("^%d" % e if e > 1 else ""))
        i = j
    return out


@lru_cache(maxsize=None)
def e_in_h(r: int) -> SymFunc:
    """e_r = sum_{k=1}^{r} (-1)^(k-1) h_k e_{r-k}, from sum_k (-1)^k e_k h_{r-k} = 0."""
    if r < 0:
        return SymFunc({}, "h")
    if r == 0:
        return SymFunc.const(1, "h")
    out = SymFunc({}, "h")
    for k in range(1, r + 1):
        term = SymFunc.gen(k, "h") * e_in_h(r - k)
        out = out + (term if k % 2 else -term)
    return out


@lru_cache(maxsize=None)
def h_in_e(r: int) -> SymFunc:
    if r < 0:
        return SymFunc({}, "e")
    if r == 0:
        return SymFunc.const(1, "e")
    out = SymFunc({}, "e")
    for k in range(1, r + 1):
        term = SymFunc.gen(k, "e") * h_in_e(r - k)
        out = out + (term if k % 2 else -term)
    return out


def h(k: int) -> SymFunc:
    return SymFunc.gen(k, "h")


def e(k: int) -> SymFunc:
    return e_in_h(k)


def elementary_values(zeta: Sequence[complex], kmax: int) -> list:
    """[e_0, ..., e_kmax] at the point zeta."""
    co = [1 + 0j] + [0j] * kmax
    for z in zeta:
        for k in range(kmax, 0, -1):
            co[k] += z * co[k - 1]
    return co


def complete_values(zeta: Sequence[complex], kmax: int) -> list:
    ev = elementary_values(zeta, kmax)
    hv = [1 + 0j] + [0j] * kmax
    for r in range(1, kmax + 1):
        hv[r] = sum(((-1) ** (k - 1)) * ev[k] * hv[r - k] for k in range(1, r + 1))
    return hv


def gen_values(zeta, basis: str, kmax: int) -> list:
    return elementary_values(zeta, kmax) if basis == "e" else complete_values(zeta, kmax)


def _det_laplace(M):
    """Determinant by memoized Laplace expansion (commutative ring entries)."""
    n = len(M)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def rec(row, cols):
        if row == n:
            return None
        total = None
        for idx, c in enumerate(cols):
            entry = M[row][c]
            if not entry:
                continue
            sub = rec(row + 1, cols[:idx] + cols[idx + 1:])
            term = entry if sub is None else entry * sub
            if idx % 2:
                term = -term
            total = term if total is None else total + term
        return total if total is not None else M[row][cols[0]] * 0

    return rec(0, tuple(range(n)))


@lru_cache(maxsize=None)
def schur_in_h(lam: Tuple[int, ...]) -> SymFunc:
    """Jacobi-Trudi: s_lam = det(h_{lam_i - i + j})."""
    lam = normalize(lam)
    if not lam:
        return SymFunc.const(1, "h")
    n = len(lam)
    M = [[h(lam[i] - i + j) for j in range(n)] for i in range(n)]
    return _det_laplace(M)


def schur_eval_jt(lam: Sequence[int], zeta: Sequence[complex]) -> complex:
    lam = normalize(lam)
    if not lam:
        return 1 + 0j
    n = len(lam)
    hv = complete_values(zeta, lam[0] + n)
    M = np.array([[hv[lam[i] - i + j] if lam[i] - i + j >= 0 else 0 for j in range(n)]
                  for i in range(n)], dtype=complex)
    return complex(np.linalg.det(M))


def schur_eval(lam: Sequence[int], zeta: Sequence[complex], tol: float = 1e-9) -> complex:
    """s_lam(zeta) as a ratio of alternants, or by Jacobi-Trudi when entries collide."""
    lam = normalize(lam)
    a = len(zeta)
    if len(lam) > a:
        return 0j
    if not lam:
        return 1 + 0j
    z = np.asarray(zeta, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(z)))) if a else 1.0
    gaps = [abs(z[i] - z[j]) for i in range(a) for j in range(i + 1, a)]
    if gaps and min(gaps) < tol * scale:
        return schur_eval_jt(lam, zeta)
    padded = list(lam) + [0] * (a - len(lam))
    num = np.array([[zz ** (padded[j] + a - 1 - j) for j in range(a)] for zz in z])
    den = np.array([[zz ** (a - 1 - j) for j in range(a)] for zz in z])
    return complex(np.linalg.det(num) / np.linalg.det(den))


@lru_cache(maxsize=None)
def power_sum_in_eh(t: int) -> SymFunc:
    """p_t = sum_{r+s=t} (-1)^s r e_s h_r, returned in the h basis."""
    if t < 1:
        raise ValueError("power sum index must be positive")
    out = SymFunc({}, "h")
    for r in range(1, t + 1):
        s = t - r
        term = e_in_h(s) * h(r) * r
        out = out + (term if s % 2 == 0 else -term)
    return out


@lru_cache(maxsize=None)
def power_sum_newton(t: int) -> SymFunc:
    """Independent route: p_t = t h_t - sum_{r=1}^{t-1} h_r p_{t-r}."""
    out = h(t) * t
    for r in range(1, t):
        out = out - h(r) * power_sum_newton(t - r)
    return out


def power_sum_product(mu: Sequence[int]) -> SymFunc:
    out = SymFunc.const(1, "h")
    for k in mu:
        out = out * power_sum_in_eh(k)
    return out
