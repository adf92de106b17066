"""Rational functions num/den in one variable, kept in lowest terms."""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, poly_gcd


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = "t"):
        if not isinstance(num, Poly):
            num = Poly([num], var)
        if den is None:
            den = Poly([1], num.var)
        elif not isinstance(den, Poly):
            den = Poly([den], num.var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            num, den = Poly((), num.var), Poly([1], num.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def var(self):
        return self.num.var if self.num.degree > 0 else self.den.var

    def _c(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return RatFunc(Poly([Fraction(other)], self.var))

    def __add__(self, other):
        o = self._c(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        o = self._c(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._c(other)
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._c(other) / self

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            o = self._c(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return "RatFunc(%s)" % self.num
        return "RatFunc((%s)/(%s))" % (self.num, self.den)

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)
