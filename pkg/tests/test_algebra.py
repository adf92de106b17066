from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qsatake.algebra import (OreOperator, Poly, RatFunc, det, left_strip, minimal_dependence,
                             nullspace, pfaffian, solve)
from qsatake.algebra.poly import factor_string, poly_gcd

small = st.integers(-6, 6)
dpolys = st.lists(small, min_size=0, max_size=4).map(lambda c: Poly(c, "D"))
ore_ops = st.dictionaries(st.integers(0, 2), dpolys, max_size=3).map(OreOperator)


def test_poly_arithmetic_and_division():
    x = Poly.gen()
    p = (x - 1) * (x + 2) ** 2
    q, r = divmod(p, x + 2)
    assert r == 0 and q == (x - 1) * (x + 2)
    assert poly_gcd(p, (x + 2) * (x + 5)).monic() == x + 2
    assert p.shift(1)(Fraction(0)) == p(Fraction(1))
    assert factor_string(Poly([0, 0, 1, 1], "D")) == "D^2*(D + 1)"


def test_ratfunc_lowest_terms():
    t = Poly.gen("t")
    f = RatFunc(t * t - 1, t - 1)
    assert f == RatFunc(t + 1)
    assert (f / RatFunc(t + 1)) == RatFunc(Poly([1], "t"))
    assert RatFunc(t * t).derivative() == RatFunc(2 * t)


def test_linear_algebra():
    A = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert solve(A, [Fraction(1), Fraction(3)]) is None
    (k,) = nullspace(A)
    assert k[0] + 2 * k[1] == 0
    assert det([[Fraction(2), Fraction(1)], [Fraction(7), Fraction(4)]]) == 1
    assert minimal_dependence([[1, 0], [2, 0]]) == [Fraction(-2), Fraction(1)]
    assert minimal_dependence([[1, 0], [0, 1]]) == "independent"


def test_pfaffian_small():
    a, b, c, d, e, f = (Fraction(v) for v in (1, 2, 3, 4, 5, 6))
    A = [[0, a, b, c], [-a, 0, d, e], [-b, -d, 0, f], [-c, -e, -f, 0]]
    assert pfaffian(A) == a * f - b * e + c * d
    assert pfaffian([]) == 1
    with pytest.raises(ValueError):
        pfaffian([[Fraction(0)]])


@st.composite
def skew_matrices(draw):
    n = 2 * draw(st.integers(0, 3))
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(draw(small), draw(st.integers(1, 3)))
            A[i][j], A[j][i] = v, -v
    return A


@given(skew_matrices())
def test_pfaffian_squared_is_determinant(A):
    assert pfaffian(A) ** 2 == (det(A) if A else 1)


def test_ore_commutation():
    D, t = OreOperator.D(), OreOperator.t()
    assert D * t == t * (D + 1)
    assert (D * t).terms == {1: Poly([1, 1], "D")}


@settings(max_examples=60)
@given(ore_ops, ore_ops, ore_ops)
def test_ore_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60)
@given(ore_ops, st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_strip_round_trip(L, roots):
    if not L:
        return
    c = Poly([1], "D")
    for r in roots:
        c = c * Poly([r, 1], "D")
    prod = OreOperator.from_dpoly(c) * L
    factor, rest = left_strip(prod)
    assert OreOperator.from_dpoly(factor) * rest == prod
    # the stripped factor absorbs c
    assert divmod(factor, c)[1] == 0


def test_apply_series_matches_operator_product():
    D, t = OreOperator.D(), OreOperator.t()
    L = D * D - t
    a = [Fraction(1)]
    for n in range(1, 8):
        a.append(a[-1] / (n * n))
    assert not any(L.apply_series(a))


def test_operator_json_round_trip():
    D, t = OreOperator.D(), OreOperator.t()
    L = D ** 3 - t * (2 * D + 1) + t * t * Fraction(1, 2)
    assert OreOperator.from_json(L.to_json()) == L


def test_left_strip_zero_raises():
    with pytest.raises(ValueError):
        left_strip(OreOperator())
