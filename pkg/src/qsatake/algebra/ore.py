"""Operators sum_i t^i P_i(D) in Q[t]<D>, with D = t d/dt, so D t = t (D + 1)."""

from __future__ import annotations

import json
from math import gcd, lcm
from fractions import Fraction
from typing import Dict, List, Tuple

from .poly import Poly, factor_string, format_terms, poly_gcd


def _dpoly(p) -> Poly:
    if isinstance(p, Poly):
        return p.with_var("D")
    if isinstance(p, (list, tuple)):
        return Poly(p, "D")
    return Poly([p], "D")


class OreOperator:
    """Normal form: every power of t sits to the left of its D-polynomial."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, Poly] = None):
        clean = {}
        for i, p in (terms or {}).items():
            if i < 0:
                raise ValueError("negative t power")
            p = _dpoly(p)
            if p:
                clean[int(i)] = p
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("OreOperator is immutable")

    @classmethod
    def D(cls) -> "OreOperator":
        return cls({0: Poly([0, 1], "D")})

    @classmethod
    def t(cls) -> "OreOperator":
        return cls({1: Poly([1], "D")})

    @classmethod
    def scalar(cls, c) -> "OreOperator":
        return cls({0: Poly([c], "D")})

    @classmethod
    def from_dpoly(cls, p: Poly) -> "OreOperator":
        return cls({0: p})

    def coeff(self, i: int) -> Poly:
        return self.terms.get(i, Poly((), "D"))

    @property
    def t_degree(self) -> int:
        return max(self.terms) if self.terms else -1

    @property
    def d_degree(self) -> int:
        return max((p.degree for p in self.terms.values()), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def _c(self, other) -> "OreOperator":
        if isinstance(other, OreOperator):
            return other
        if isinstance(other, Poly):
            return OreOperator({0: other})
        return OreOperator.scalar(other)

    def __add__(self, other):
        o = self._c(other)
        out = dict(self.terms)
        for i, p in o.terms.items():
            out[i] = out.get(i, Poly((), "D")) + p
        return OreOperator(out)

    __radd__ = __add__

    def __neg__(self):
        return OreOperator({i: -p for i, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        # (t^i P(D)) (t^j Q(D)) = t^(i+j) P(D + j) Q(D)
        o = self._c(other)
        out: Dict[int, Poly] = {}
        for i, p in self.terms.items():
            for j, q in o.terms.items():
                term = p.shift(j) * q
                out[i + j] = out.get(i + j, Poly((), "D")) + term
        return OreOperator(out)

    def __rmul__(self, other):
        return self._c(other) * self

    def __pow__(self, k: int):
        out = OreOperator.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, OreOperator):
            try:
                other = self._c(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def map_coeffs(self, fn) -> "OreOperator":
        return OreOperator({i: fn(i, p) for i, p in self.terms.items()})

    def apply_series(self, a: List[Fraction]) -> List[Fraction]:
        """Apply to sum a_n t^n; the coefficient of t^n is sum_i P_i(n - i) a_{n-i}."""
        out = []
        for n in range(len(a)):
            s = Fraction(0)
            for i, p in self.terms.items():
                if n - i >= 0:
                    s += p(Fraction(n - i)) * a[n - i]
            out.append(s)
        return out

    def normalized(self) -> "OreOperator":
        """Integer primitive form; the top D power, taken at its lowest t power,
        gets a positive coefficient."""
        if not self.terms:
            return self
        flat = [a for p in self.terms.values() for a in p.coeffs]
        den = 1
        for a in flat:
            den = lcm(den, a.denominator)
        g = 0
        for a in flat:
            g = gcd(g, int(a * den))
        scale = Fraction(den, g)
        top = self.d_degree
        lead = next(p for p in self.terms.values() if p.degree == top)
        if lead.lc < 0:
            scale = -scale
        return OreOperator({i: p * scale for i, p in self.terms.items()})

    # serialization and display
    def to_dict(self) -> dict:
        return {
            "variable": "t",
            "terms": [{"t_power": i, "D_coeffs": p.to_strings()} for i, p in self.terms.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "OreOperator":
        if data.get("variable", "t") != "t":
            raise ValueError("only the variable t is supported")
        return cls({int(term["t_power"]): Poly([Fraction(c) for c in term["D_coeffs"]], "D")
                    for term in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "OreOperator":
        return cls.from_dict(json.loads(text))

    def _render(self, fmt, product_form=False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, p in self.terms.items():
            neg = p.lc < 0
            body = fmt(-p if neg else p)
            if i == 0:
                term = body
            else:
                tp = "t" if i == 1 else "t^%d" % i
                if body == "1":
                    term = tp
                elif product_form or p.is_monomial() or body.startswith("("):
                    term = "%s*%s" % (tp, body)
                else:
                    term = "%s*(%s)" % (tp, body)
            if not parts:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append(("- " if neg else "+ ") + term)
        return " ".join(parts)

    def __str__(self):
        return self._render(lambda p: format_terms(p.coeffs, "D"))

    def factored(self) -> str:
        return self._render(factor_string, product_form=True)

    def __repr__(self):
        return "OreOperator(%s)" % self


def left_strip(L: OreOperator) -> Tuple[Poly, OreOperator]:
    """Split L = c(D) * L' with c = gcd_i P_i(D - i) monic.

    Because c(D) t^i = t^i c(D + i), c divides L on the left exactly when
    c(D + i) divides every P_i.
    """
    if not L:
        raise ValueError("cannot strip the zero operator")
    c = poly_gcd(*[p.shift(-i) for i, p in L.terms.items()])
    rest = OreOperator({i: p // c.shift(i) for i, p in L.terms.items()})
    return c, rest


ore_left_strip = left_strip
