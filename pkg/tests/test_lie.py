import random
from fractions import Fraction

import numpy as np
import pytest

from qsatake.lie.centralizer import (centralizer_basis, centralizer_dimension, centralizer_q_basis,
                                     cyclic_span_dimension, degree_kernel, exponent_profile,
                                     invalid_printed_terms, jordan_type, p_class_coefficients,
                                     printed_y, proportionality, special_classes, x_q_element)
from qsatake.lie.chevalley import chevalley_basis
from qsatake.lie.minuscule import minuscule_module
from qsatake.lie.roots import build_root_system, height, parse_root


@pytest.fixture(scope="module")
def e6():
    rs = build_root_system("E6")
    m = minuscule_module(rs, 1)
    return rs, m, chevalley_basis(m)


@pytest.fixture(scope="module")
def e7():
    rs = build_root_system("E7")
    m = minuscule_module(rs, 1)
    return rs, m, chevalley_basis(m)


def test_root_counts():
    assert len(build_root_system("E6").positive) == 36
    assert len(build_root_system("E7").positive) == 63
    a2 = build_root_system(("A", 2))
    assert a2.highest_root == (1, 1) and height(a2.highest_root) == 2
    assert build_root_system("E6").exponents() == (1, 4, 5, 7, 8, 11)
    assert build_root_system("E7").exponents() == (1, 5, 7, 9, 11, 13, 17)
    with pytest.raises(ValueError):
        build_root_system("F4")


def test_module_dimensions(e6, e7):
    assert e6[1].dim == 27 and e7[1].dim == 56
    for _, m, _ in (e6, e7):
        m.check_relations()
        for M in list(m.E.values()) + list(m.F.values()):
            assert set(np.unique(M)) <= {0, 1}


def test_sl2_triples_and_weights(e6):
    rs, m, B = e6
    for i in range(1, rs.rank + 1):
        a = rs.simple(i)
        assert B.bracket({a: 1}, {tuple(-x for x in a): 1}) == {("H", i): 1}
    beta = rs.highest_root
    for i in range(1, rs.rank + 1):
        out = B.bracket({("H", i): 1}, {beta: 1})
        assert out == ({beta: rs.pairing(beta, i)} if rs.pairing(beta, i) else {})


@pytest.mark.parametrize("name", ["E6", "E7"])
def test_jacobi(name, e6, e7):
    _, _, B = e6 if name == "E6" else e7
    rng = random.Random(1)
    for _ in range(100):
        a, b, c = ({rng.choice(B.labels): Fraction(1)} for _ in range(3))
        total = {}
        for t in (B.bracket(a, B.bracket(b, c)), B.bracket(b, B.bracket(c, a)), B.bracket(c, B.bracket(a, b))):
            for k, v in t.items():
                total[k] = total.get(k, 0) + v
        assert not any(total.values())


def test_exponent_profiles(e6, e7):
    for rs, _, B in (e6, e7):
        prof = exponent_profile(B)
        assert sorted(d for d, k in prof.items() for _ in range(k)) == list(rs.exponents())


def test_type_a_centralizer_is_powers_of_x():
    rs = build_root_system(("A", 3))
    B = chevalley_basis(minuscule_module(rs, 1))
    X = B.matrix(B.principal_nilpotent(-1))
    for y in centralizer_basis(B):
        Y = B.matrix(y.element())
        P = np.linalg.matrix_power(X.astype(float), y.d)
        ratio = Y[np.nonzero(P)] / P[np.nonzero(P)]
        assert np.allclose(ratio, ratio[0]) and np.count_nonzero(Y) == np.count_nonzero(P)


def test_e6_y4_matches_printed(e6):
    rs, _, B = e6
    (k,) = degree_kernel(B, 4)
    ref = printed_y("E6", 4, rs)
    assert proportionality(k, ref) is not None


def test_e7_y5_matches_printed(e7):
    rs, _, B = e7
    (k,) = degree_kernel(B, 5)
    ref = printed_y("E7", 5, rs)
    assert sorted(ref.values()) == sorted(Fraction(c) for c in (2, 2, -1, 1, -1, -3))
    assert proportionality(k, ref) is not None


def test_e7_printed_roots_with_misprints():
    bad = invalid_printed_terms("E7")
    assert [d for d, _ in bad] == [7, 9, 11]
    assert invalid_printed_terms("E6") == []
    with pytest.raises(ValueError):
        parse_root("theta+a4+a5", build_root_system("E7"))


def test_special_classes_e6():
    reports = special_classes("E6")
    assert [r.d for r in reports] == [1, 4, 5, 7, 8, 11]
    assert all(r.scalar == 1 for r in reports)
    p4 = next(r for r in reports if r.d == 4)
    assert p4.computed == {"5431": 1, "2431": -1}


def test_special_classes_e7():
    reports = {r.d: r for r in special_classes("E7")}
    assert reports[5].computed == {"54321": -3, "64321": 2}
    assert reports[5].scalar == -1
    assert reports[1].computed == {"1": 1}
    assert [d for d, r in reports.items() if not r.matches] == [17]
    assert "length" in reports[17].note


def test_p1_is_hyperplane_class(e6):
    rs, m, B = e6
    y1 = centralizer_basis(B)[0]
    assert p_class_coefficients(m, y1, B) == {"1": 1}


@pytest.mark.parametrize("name", ["E6", "E7"])
def test_q_corrections(name, e6, e7):
    rs, _, B = e6 if name == "E6" else e7
    h = rs.coxeter_number
    X = B.matrix(x_q_element(B, 1))
    for y in centralizer_q_basis(B):
        assert all(height(g) == h - y.d for g in y.z)
        Y = B.matrix({**y.element(), **y.q_part()})
        assert np.abs(X @ Y - Y @ X).max() < 1e-9
    assert centralizer_dimension(B, x_q_element(B, 1)) == rs.rank


def test_cyclic_span_is_not_full(e6, e7):
    # x is regular nilpotent, but e_omega is not a cyclic vector for it
    assert jordan_type(e6[1], e6[2]) == [17, 9, 1]
    assert cyclic_span_dimension(e6[1], e6[2]) == 17
    assert jordan_type(e7[1], e7[2]) == [28, 18, 10]


def test_reduced_words_round_trip(e6):
    _, m, _ = e6
    for nu in m.weights:
        assert m.weight_of_word(m.word(nu)) == nu
    assert len(m.word(m.weights[-1])) == 16
