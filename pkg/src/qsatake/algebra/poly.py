"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm
from typing import Iterable, Sequence


def _frac(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, (int, str)):
        return Fraction(a)
    raise TypeError("polynomial coefficients must be rational, got %r" % (a,))


class Poly:
    """A polynomial sum c[i] * var**i over the rationals.

    The coefficient tuple never ends in a zero, so the zero polynomial is
    the empty tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        c = [_frac(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers
    @classmethod
    def const(cls, a, var: str = "x") -> "Poly":
        return cls([a], var)

    @classmethod
    def gen(cls, var: str = "x") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, k: int, a=1, var: str = "x") -> "Poly":
        return cls([0] * k + [a], var)

    @classmethod
    def from_roots(cls, roots: Sequence, var: str = "x") -> "Poly":
        p = cls.const(1, var)
        for r in roots:
            p = p * cls([-_frac(r), 1], var)
        return p

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # coercion
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError("variable mismatch: %s vs %s" % (self.var, other.var))
            if other.var != self.var:
                return Poly(other.coeffs, self.var)
            return other
        return Poly([other], self.var)

    def _var_with(self, other: "Poly") -> str:
        if self.degree <= 0 and other.degree > 0:
            return other.var
        return self.var

    # arithmetic
    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)], self._var_with(o))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.coeffs], self.var)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly((), self._var_with(o))
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out, self._var_with(o))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, Poly):
            q, r = divmod(self, other)
            if r:
                raise ValueError("inexact polynomial division")
            return q
        a = _frac(other)
        return Poly([c / a for c in self.coeffs], self.var)

    def __divmod__(self, other):
        o = self._coerce(other)
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / o.lc
        for k in range(len(rem) - 1 - dq, -1, -1):
            f = rem[k + dq] * inv
            quot[k] = f
            if f:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= f * b
        return Poly(quot, self.var), Poly(rem[:dq], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and (self.var == other.var or self.degree <= 0)
        try:
            return self.coeffs == Poly([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.coeffs)
        return hash((self.coeffs, self.var))

    # evaluation and transformations
    def __call__(self, x):
        acc = 0 * x if not isinstance(x, Poly) else Poly((), x.var)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def shift(self, c) -> "Poly":
        """Return p(var + c)."""
        return self(Poly([c, 1], self.var)) if self.coeffs else self

    def derivative(self) -> "Poly":
        return Poly([i * a for i, a in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.lc

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive in Z[x]."""
        if not self.coeffs:
            return Fraction(0)
        den = 1
        for a in self.coeffs:
            den = ilcm(den, a.denominator)
        num = 0
        for a in self.coeffs:
            num = igcd(num, int(a * den))
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        c = self.content()
        return self / c if c else self

    def is_monomial(self) -> bool:
        return sum(1 for a in self.coeffs if a) == 1

    # display
    def __repr__(self):
        return "Poly(%s, %r)" % ([str(a) for a in self.coeffs], self.var)

    def __str__(self):
        return format_terms(self.coeffs, self.var)

    def to_strings(self) -> list:
        return [str(a) for a in self.coeffs]


def format_terms(coeffs: Sequence[Fraction], var: str, descending: bool = True) -> str:
    items = [(k, a) for k, a in enumerate(coeffs) if a]
    if not items:
        return "0"
    if descending:
        items.reverse()
    parts = []
    for k, a in items:
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else "%s^%d" % (var, k)
            body = mono if mag == 1 else "%s*%s" % (mag, mono)
        if not parts:
            parts.append(("-" if a < 0 else "") + body)
        else:
            parts.append(("- " if a < 0 else "+ ") + body)
    return " ".join(parts)


def poly_gcd(*polys: Poly) -> Poly:
    """Monic gcd of the given polynomials; gcd(0, b) = monic(b)."""
    if not polys:
        raise ValueError("poly_gcd needs at least one argument")
    var = polys[0].var
    for p in polys:
        if p.var != var and p.degree > 0:
            raise ValueError("variable mismatch in gcd: %s vs %s" % (var, p.var))
    g = Poly((), var)
    for p in polys:
        a, b = g, Poly(p.coeffs, var)
        while b:
            a, b = b, a % b
        g = a.monic()
    return g


def rational_roots(p: Poly) -> list:
    """Rational roots of p with multiplicity, by the rational root test."""
    roots = []
    q = p.primitive()
    if not q:
        raise ValueError("zero polynomial has no finite root list")
    while q.degree > 0 and q[0] == 0:
        roots.append(Fraction(0))
        q = Poly(q.coeffs[1:], q.var)
    if q.degree <= 0:
        return roots

    def divisors(m):
        m = abs(m)
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return set(out)

    found = True
    while found and q.degree > 0:
        found = False
        a0, an = int(q[0]), int(q.lc)
        cands = sorted({Fraction(s * u, v) for u in divisors(a0) for v in divisors(an) for s in (1, -1)})
        for r in cands:
            if q(r) == 0:
                roots.append(r)
                q = q // Poly([-r, 1], q.var)
                q = q.primitive()
                found = True
                break
    return roots


def factor_string(p: Poly) -> str:
    """Human-readable factorization over Q: rational linear factors split off."""
    if not p:
        return "0"
    var = p.var
    roots = rational_roots(p)
    rest = p
    linear = {}
    for r in roots:
        lin = Poly([-r.numerator, r.denominator], var)
        rest = rest // lin
        linear[r] = linear.get(r, 0) + 1
    unit = rest.content() * (1 if rest.lc > 0 else -1)
    rest = rest / unit
    pieces = []
    for r in sorted(linear, key=lambda r: (r != 0, -r)):
        e = linear[r]
        if r == 0:
            base = var
        else:
            base = "(%s)" % format_terms(Poly([-r.numerator, r.denominator], var).coeffs, var)
        pieces.append(base if e == 1 else "%s^%d" % (base, e))
    if rest.degree > 0:
        pieces.append("(%s)" % format_terms(rest.coeffs, var))
    body = "*".join(pieces)
    if not body:
        return str(unit)
    if unit == 1:
        return body
    if unit == -1:
        return "-" + body
    return "%s*%s" % (unit, body)
