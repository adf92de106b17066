from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qsatake.symfun import (add_border_rims, conjugate, mn_character, parse_partition, partitions_of,
                            remove_border_rims, schur_eval, schur_in_h, strict_partitions, z_mu)
from qsatake.symfun.partitions import contains, is_border_rim, rim_height, strict_complement
from qsatake.symfun.ptilde import PtildeTable, ptilde_eval
from qsatake.symfun.symfunc import SymFunc, power_sum_in_eh, power_sum_newton, schur_eval_jt
from qsatake.typed.spinor import normalizer, spinor_spectrum

partitions = st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def brute_rims(lam, size):
    out = []
    for mu in partitions_of(sum(lam) + size):
        if contains(mu, lam) and is_border_rim(mu, lam):
            out.append((mu, rim_height(mu, lam)))
    return sorted(out)


@given(partitions, st.integers(1, 5))
def test_add_rims_match_brute_force(lam, size):
    assert sorted(add_border_rims(lam, size)) == brute_rims(lam, size)


@given(partitions, st.integers(1, 5))
def test_remove_rims_invert_add(lam, size):
    for nu, ht in remove_border_rims(lam, size):
        assert (lam, ht) in add_border_rims(nu, size)


def test_size_five_rims_of_a_box():
    rims = add_border_rims((1,), 5)
    assert ((1, 1, 1, 1, 1, 1), 4) in rims
    # (2,1,1,1,1)/(1) is disconnected, so it is not a rim
    assert all(mu != (2, 1, 1, 1, 1) for mu, _ in rims)


def test_parse_partition():
    assert parse_partition(" ( 4, 3 ,1) ") == (4, 3, 1)
    assert parse_partition("()") == ()
    with pytest.raises(ValueError, match="position"):
        parse_partition("(4,x)")
    with pytest.raises(ValueError):
        parse_partition("(1,2)")


@pytest.mark.parametrize("n", range(1, 8))
def test_character_orthogonality(n):
    parts = partitions_of(n)
    for lam in parts:
        for nu in parts:
            s = sum(Fraction(mn_character(lam, mu) * mn_character(nu, mu), z_mu(mu)) for mu in parts)
            assert s == (1 if lam == nu else 0)
    # column orthogonality
    for mu in parts:
        for rho in parts:
            s = sum(mn_character(lam, mu) * mn_character(lam, rho) for lam in parts)
            assert s == (z_mu(mu) if mu == rho else 0)


def test_character_values():
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((3,), (2, 1)) == 1


@pytest.mark.parametrize("t", range(1, 7))
def test_power_sum_two_routes(t):
    assert power_sum_in_eh(t) == power_sum_newton(t)


@given(partitions, st.integers(1, 4))
def test_schur_alternant_vs_jacobi_trudi(lam, a):
    rng = np.random.default_rng(sum(lam) * 7 + a)
    z = rng.normal(size=a) + 1j * rng.normal(size=a)
    assert abs(schur_eval(lam, z) - schur_eval_jt(lam, z)) < 1e-8 * (1 + abs(schur_eval_jt(lam, z)))
    assert abs(schur_in_h(lam).evaluate(z) - schur_eval_jt(lam, z)) < 1e-8 * (1 + abs(schur_eval_jt(lam, z)))


def test_conjugate_involution():
    for lam in partitions_of(6):
        assert conjugate(conjugate(lam)) == lam


def test_ptilde_two_by_one_entry():
    e = lambda k: SymFunc.gen(k, "e")
    want = e(2) * e(1) / 4 - e(3) / 2
    for sign in ("s", "r+s"):
        assert PtildeTable(4, 3, sign).entry(2, 1) == want


def test_ptilde_last_sign_variants_differ_on_odd_r():
    e = lambda k: SymFunc.gen(k, "e")
    std = PtildeTable(4, 3, "s").entry(3, 1)
    alt = PtildeTable(4, 3, "r+s").entry(3, 1)
    assert std == e(3) * e(1) / 4 - e(4) / 2
    assert alt == e(3) * e(1) / 4 + e(4) / 2
    # no difference once e_{r+s} vanishes
    assert PtildeTable(3, 3, "s").entry(3, 1) == PtildeTable(3, 3, "r+s").entry(3, 1)


def test_ptilde_skew_and_numeric():
    T = PtildeTable(5, 4)
    z = (0.3 + 0.1j, -1.2, 0.7j, 2.0, -0.4 + 0.9j)
    for r in range(5):
        for s in range(5):
            assert T.entry(r, s) == -T.entry(s, r)
    for lam in [(4, 2, 1), (3, 1), (4, 3, 2, 1), (2,)]:
        assert abs(T.pfaffian(lam).evaluate(z) - ptilde_eval(lam, z)) < 1e-10


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ptilde_orthogonality_on_spectrum(n):
    """sum_zeta P~_lam P~_{mu^c} / c(zeta) = delta."""
    basis = strict_partitions(n)
    G = np.zeros((len(basis), len(basis)), dtype=complex)
    for z in spinor_spectrum(n):
        c = normalizer(z)
        for i, lam in enumerate(basis):
            for j, mu in enumerate(basis):
                G[i, j] += ptilde_eval(lam, z) * ptilde_eval(strict_complement(mu, n), z) / c
    assert np.abs(G - np.eye(len(basis))).max() < 1e-10
