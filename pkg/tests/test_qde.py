from fractions import Fraction

import mpmath
import pytest

from qsatake.algebra import OreOperator, Poly
from qsatake.qde import (APERY_ALPHA, ConnectionMatrix, CyclicityError, apery_binomial, apery_operator,
                         apery_recurrence, apery_sequences, hyperplane_matrix, lcm_upto,
                         lefschetz_transform, minimal_operator, operator_to_recurrence, regularize,
                         section_transform, unit_series, zeta3_decimal, zeta3_enclosure, zeta3_report)

D, t = OreOperator.D(), OreOperator.t()

PRINTED_M = """\
0 0 0 0 0 0 0 0 0 0 0 t 0 0 0 0
1 0 0 0 0 0 0 0 0 0 0 0 0 t 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 t 0
0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 t
0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0"""


@pytest.fixture(scope="module")
def og510():
    return hyperplane_matrix("OG:5")


def og_minimal():
    return D ** 11 * (D - 1) ** 5 - t * D ** 5 * (2 * D + 1) * (17 * D * D + 17 * D + 5) + t * t


def test_og510_matrix(og510):
    assert og510.rows_as_strings() == [r.split() for r in PRINTED_M.splitlines()]


def test_p2_matrix_and_unit_column():
    M = hyperplane_matrix("A:1,2")
    assert M.rows_as_strings() == [["0", "0", "t"], ["1", "0", "0"], ["0", "1", "0"]]
    og = hyperplane_matrix(("OG", (4,)))
    assert og.rows_as_strings()[1][0] == "1" and sum(x != "0" for x in [r[0] for r in og.rows_as_strings()]) == 1


def test_minimal_operators(og510):
    assert minimal_operator(og510) == og_minimal()
    assert minimal_operator(hyperplane_matrix("A:1,1")) == D * D - t
    zero = ConnectionMatrix(("pt",), ((Poly((), "t"),),))
    assert minimal_operator(zero) == D


def test_noncyclic_unit():
    M = hyperplane_matrix("A:2,2")
    with pytest.raises(CyclicityError) as err:
        minimal_operator(M)
    assert err.value.span == 5
    L = minimal_operator(M, require_cyclic=False)
    assert L.d_degree == 5 and L.t_degree <= 2


def test_lefschetz_and_regularize(og510):
    c, V = lefschetz_transform(minimal_operator(og510), 7)
    assert c == Poly([0, 0, 0, 0, 0, 0, 0, 1], "D") * Poly([-1, 1], "D") ** 5
    assert V == D ** 4 - t * (2 * D + 1) * (17 * D * D + 17 * D + 5) + t * t * (D + 1) ** 2
    c2, A = regularize(V)
    assert c2 == Poly([0, 1], "D")
    assert A == apery_operator()
    # a second pass is not the identity
    assert regularize(A)[1] != A


def test_transform_edge_cases():
    L = og_minimal()
    assert section_transform(L, 0) == L
    assert section_transform(L, 3).coeff(0) == L.coeff(0)
    assert regularize(D) == (Poly([0, 1], "D"), OreOperator.scalar(1))


def test_recurrences():
    rec = apery_recurrence()
    n = Poly.gen("n")
    assert rec.coeffs[0] == n ** 3
    assert rec.coeffs[1] == -(34 * n ** 3 - 51 * n ** 2 + 27 * n - 5)
    assert rec.coeffs[2] == (n - 1) ** 3
    assert operator_to_recurrence(D).coeffs == (n,)
    r = operator_to_recurrence(D * D - t)
    assert r.coeffs == (n * n, Poly([-1], "n"))


def test_series_is_annihilated(og510):
    L = minimal_operator(og510)
    f = unit_series(og510, 20)
    assert f[:2] == [1, 5] and not any(L.apply_series(f))
    rec = operator_to_recurrence(L)
    assert rec.solve(f[:2], 20) == f


def test_series_of_p1():
    M = hyperplane_matrix("A:1,1")
    f = unit_series(M, 10)
    from math import factorial
    assert f == [Fraction(1, factorial(k) ** 2) for k in range(11)]


def test_apery_numbers():
    a, b = apery_sequences(20)
    assert a[:4] == [1, 5, 73, 1445]
    assert all(a[k] == apery_binomial(k) for k in range(21))
    assert b[0] == 0 and b[1] == 1
    for k in range(1, 21):
        assert (12 * lcm_upto(k) ** 3) % b[k].denominator == 0


def test_zeta3():
    lo, hi = zeta3_enclosure()
    assert hi - lo < Fraction(1, 10 ** 35)
    mpmath.mp.dps = 80
    z = mpmath.zeta(3)
    assert mpmath.mpf(lo.numerator) / lo.denominator < z < mpmath.mpf(hi.numerator) / hi.denominator
    assert str(zeta3_decimal())[:32] == mpmath.nstr(z, 30, strip_zeros=False)[:32]


def test_zeta3_report():
    rows = zeta3_report(20)
    assert rows[1]["error"] < Fraction(3, 1000)
    assert rows[10]["error_bound"] < Fraction(1, 10 ** 10)
    ratios = [float(r["ratio"]) for r in rows[1:]]
    assert all(x < y < APERY_ALPHA for x, y in zip(ratios, ratios[1:]))
    # a_n ~ C alpha^n n^(-3/2): the corrected ratio is already close at n = 20
    n = 20
    assert abs(ratios[-1] * ((n + 1) / n) ** 1.5 - APERY_ALPHA) < 0.1
