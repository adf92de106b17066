"""Schur P-tilde functions as Pfaffians of a skew matrix of symmetric functions.

P~_0 = 1, P~_i = e_i / 2, and for r > s >= 1

    P~_{r,s} = P~_r P~_s + 2 sum_{i=1}^{s-1} (-1)^i P~_{r+i} P~_{s-i} + (-1)^s P~_{r+s},

extended skew-symmetrically, with P~_{r,0} = P~_r.  For a strict partition
of even length, P~_lam is the Pfaffian of the minor on its parts; odd
lengths get a trailing zero part.

The variant ``last_sign="r+s"`` uses (-1)^(r+s) on the last term instead.
The two agree when r is even or P~_{r+s} vanishes (r + s >= n_vars + 1), so
they first differ for four variables; only the (-1)^s form is compatible
with the spinor quantum ring.
"""

from __future__ import annotations

from typing import Dict, Sequence, Tuple

from ..algebra.pfaffian import pfaffian_minor
from .symfunc import SymFunc, elementary_values


def _last_sign(r: int, s: int, last_sign: str) -> int:
    if last_sign == "s":
        return -1 if s % 2 else 1
    if last_sign == "r+s":
        return -1 if (r + s) % 2 else 1
    raise ValueError("last_sign must be 's' or 'r+s'")


class PtildeTable:
    def __init__(self, n_vars: int, bound: int, last_sign: str = "s"):
        if bound < 1:
            raise ValueError("bound must be at least 1")
        _last_sign(1, 1, last_sign)
        self.last_sign = last_sign
        self.n_vars = n_vars
        self.bound = bound
        self.entries: Dict[Tuple[int, int], SymFunc] = {}
        for r in range(bound + 1):
            for s in range(r):
                val = self._formula(r, s)
                self.entries[(r, s)] = val
                self.entries[(s, r)] = -val
            self.entries[(r, r)] = SymFunc({}, "e")

    def single(self, i: int) -> SymFunc:
        if i == 0:
            return SymFunc.const(1, "e")
        if i < 0 or i > self.n_vars:
            return SymFunc({}, "e")
        return SymFunc.gen(i, "e") / 2

    def _formula(self, r: int, s: int) -> SymFunc:
        P = self.single
        if s == 0:
            return P(r)
        out = P(r) * P(s)
        for i in range(1, s):
            term = P(r + i) * P(s - i) * 2
            out = out + (term if i % 2 == 0 else -term)
        out = out + P(r + s) * _last_sign(r, s, self.last_sign)
        return out.truncate(self.n_vars)

    def entry(self, r: int, s: int) -> SymFunc:
        return self.entries[(r, s)]

    def pfaffian(self, lam: Sequence[int]) -> SymFunc:
        parts = list(lam)
        if len(parts) % 2:
            parts.append(0)
        M = [[self.entries[(a, b)] for b in parts] for a in parts]
        return pfaffian_minor(M) if parts else SymFunc.const(1, "e")


def ptilde_build(n_vars: int, bound: int, last_sign: str = "s") -> PtildeTable:
    return PtildeTable(n_vars, bound, last_sign)


def ptilde_matrix_values(zeta: Sequence[complex], bound: int, last_sign: str = "s"):
    """Numeric P~_{r,s}(zeta) for 0 <= r, s <= bound, from the same recurrence."""
    ev = elementary_values(zeta, 2 * bound + 1)

    def P(i):
        if i == 0:
            return 1 + 0j
        return ev[i] / 2 if i < len(ev) else 0j

    M = [[0j] * (bound + 1) for _ in range(bound + 1)]
    for r in range(bound + 1):
        for s in range(r):
            if s == 0:
                v = P(r)
            else:
                v = P(r) * P(s) + _last_sign(r, s, last_sign) * P(r + s)
                for i in range(1, s):
                    v += 2 * (-1) ** i * P(r + i) * P(s - i)
            M[r][s] = v
            M[s][r] = -v
    return M


def ptilde_eval(lam: Sequence[int], zeta: Sequence[complex], table=None) -> complex:
    """P~_lam(zeta); ``table`` may be a precomputed ptilde_matrix_values result."""
    parts = list(lam)
    if not parts:
        return 1 + 0j
    if len(parts) % 2:
        parts.append(0)
    if table is None:
        table = ptilde_matrix_values(zeta, max(parts))
    M = [[table[a][b] for b in parts] for a in parts]
    return complex(pfaffian_minor(M, tol=1e-12 * (1 + max(abs(x) for row in M for x in row))))
