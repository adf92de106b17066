import random
from fractions import Fraction

import numpy as np
import pytest

from qsatake.classes import ONE, Q, ZERO, qpoly
from qsatake.typed.quadric import (kernel_vector, quadric_basis, quadric_eigenvector_check,
                                   quadric_hyperplane_matrix, quadric_points, quadric_qproduct,
                                   quadric_satake_inverse_check, quadric_spectral)
from qsatake.typed.somatrix import bracket, evaluate, is_antidiagonal_skew, pos, xq_matrix, yq_matrix
from qsatake.typed.spinor import (power_sum_spectral_product, schubert_basis, spin_action,
                                  spinor_hyperplane_matrix, spinor_power_product, spinor_spectral_product,
                                  spinor_spectrum, spinor_tau_top_product, spinor_weight_vector,
                                  tau_top_by_action, tau_top_formula, u_direct, u_formula, u_matrix,
                                  weight_vector_in_clifford_basis)
from qsatake.symfun.ptilde import ptilde_eval, ptilde_matrix_values

# ---------------------------------------------------------------- quadrics


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_xq_shape_and_eigenvectors(n):
    assert is_antidiagonal_skew(xq_matrix(n))
    assert quadric_eigenvector_check(n, 1.0) < 1e-10
    X = evaluate(xq_matrix(n), 1.0)
    for s in (1, -1):
        assert np.abs(X @ kernel_vector(s, n, 1.0)).max() < 1e-12


def test_quadric_spectral_table():
    n = 4
    pts = quadric_points(n, 1.0)
    unit = quadric_spectral({"s0": ONE}, n)
    assert all(abs(v - 1) < 1e-12 for v in unit.values())
    plus = quadric_spectral({"s3+": ONE}, n)
    assert abs(plus["0+"] - 1) < 1e-12 and abs(plus["0-"] + 1) < 1e-12
    top = quadric_spectral({"s6": ONE}, n)
    # point class: (-1)^n q on the nonzero part of the spectrum
    assert all(abs(top[p] - 1) < 1e-12 for p in pts if p.startswith("z"))
    top3 = quadric_spectral({"s4": ONE}, 3)
    assert all(abs(v + 1) < 1e-12 for p, v in top3.items() if p.startswith("z"))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_quadric_products(n):
    basis = quadric_basis(n)
    sign = (-1) ** n
    top = "s%d" % (2 * n - 2)
    assert quadric_qproduct({"s1": ONE}, {top: ONE}, n) == {"s1": Q * sign}
    for lab in basis:
        assert quadric_qproduct({"s0": ONE}, {lab: ONE}, n) == {lab: ONE}


def test_ruling_products():
    # n even: the rulings are self-dual; n odd: dual to each other
    p, m = "s3+", "s3-"
    assert quadric_qproduct({p: ONE}, {m: ONE}, 4) == {"s6": ONE}
    assert quadric_qproduct({p: ONE}, {p: ONE}, 4) == {"s0": Q}
    p, m = "s2+", "s2-"
    assert quadric_qproduct({p: ONE}, {m: ONE}, 3) == {"s0": -Q}
    assert quadric_qproduct({p: ONE}, {p: ONE}, 3) == {"s4": ONE}


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_quadric_basis_change(n):
    assert quadric_satake_inverse_check(n, 1.0) < 1e-8


def test_quadric_hyperplane_matrix_entries():
    M = quadric_hyperplane_matrix(3)
    basis = quadric_basis(3)
    col = {basis[i]: M[i][basis.index("s3")] for i in range(len(basis)) if M[i][basis.index("s3")]}
    assert col == {"s4": ONE, "s0": -Q}
    with pytest.raises(ValueError):
        quadric_basis(2)


# ---------------------------------------------------------------- spin representation


def random_so(n, rng):
    N = 2 * n
    X = [[ZERO] * N for _ in range(N)]
    for i in range(N):
        for j in range(N):
            if i + j < N - 1:  # the antidiagonal itself is forced to 0
                c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                X[i][j] = qpoly(c)
                X[N - 1 - j][N - 1 - i] = qpoly(-c)
    return X


@pytest.mark.parametrize("n", [2, 3, 4])
def test_spin_action_is_a_representation(n):
    rng = random.Random(n)
    pairs = 50 if n < 4 else 10
    for _ in range(pairs):
        X, Y = random_so(n, rng), random_so(n, rng)
        assert is_antidiagonal_skew(X)
        lhs = spin_action(X, n).compose(spin_action(Y, n)) - spin_action(Y, n).compose(spin_action(X, n))
        assert lhs == spin_action(bracket(X, Y), n)


def test_spin_action_rejects_non_skew():
    X = [[ZERO] * 4 for _ in range(4)]
    X[0][0] = ONE
    with pytest.raises(ValueError):
        spin_action(X, 2)


def test_highest_weight_line():
    n = 4
    H = [[ZERO] * 8 for _ in range(8)]
    H[pos(1, n)][pos(1, n)] = ONE
    H[pos(-1, n)][pos(-1, n)] = -ONE
    out = spin_action(H, n)({(): ONE})
    assert set(out) <= {()}


OG510_ORDER = [(), (1,), (2,), (3,), (2, 1), (4,), (3, 1), (4, 1), (3, 2), (4, 2), (3, 2, 1), (4, 3),
               (4, 2, 1), (4, 3, 1), (4, 3, 2), (4, 3, 2, 1)]


def test_og510_hyperplane_column():
    M = spinor_hyperplane_matrix(5)
    basis = schubert_basis(5)
    assert basis == OG510_ORDER
    j = basis.index((4, 3))
    assert {basis[i]: M[i][j] for i in range(16) if M[i][j]} == {(4, 3, 1): ONE, (): Q}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_power_products_two_routes(n):
    for lam in schubert_basis(n):
        for r in range(1, n):
            if 2 * r - 1 > 2 * n - 3:
                break
            assert spinor_power_product(r, lam, n) == power_sum_spectral_product(r, lam, n)


def test_power_product_unit():
    assert spinor_power_product(1, (), 4) == {(1,): ONE}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_tau_top(n):
    assert spinor_tau_top_product((), n) == {(n - 1,): ONE}
    assert spinor_tau_top_product((n - 1,), n) == {(): Q}
    if n > 2:
        assert spinor_tau_top_product((n - 1, 1), n) == {(1,): Q}
    for lam in schubert_basis(n):
        assert tau_top_by_action(lam, n) == tau_top_formula(lam, n)


def test_yq_is_in_so():
    for n in range(2, 6):
        assert is_antidiagonal_skew(yq_matrix(n))


def test_spectral_products_unit_and_symmetry():
    n = 4
    for lam in schubert_basis(n):
        assert spinor_spectral_product((), lam, n) == {lam: ONE}
        for mu in schubert_basis(n):
            assert spinor_spectral_product(lam, mu, n) == spinor_spectral_product(mu, lam, n)


def test_spectral_tau1_matches_og510_matrix():
    M = spinor_hyperplane_matrix(5)
    basis = schubert_basis(5)
    for j, lam in enumerate(basis):
        col = {basis[i]: M[i][j] for i in range(16) if M[i][j]}
        assert spinor_spectral_product((1,), lam, 5) == col


@pytest.mark.parametrize("n", [3, 4, 5])
def test_u_matrix_two_paths(n):
    for z in spinor_spectrum(n):
        U = u_matrix(z, n)
        assert np.abs(U + U.T).max() < 1e-9
        assert np.abs(u_direct(z, n) - u_formula(z, n)).max() < 1e-8
        P = ptilde_matrix_values(z, n - 1)
        for r in range(n):
            for s in range(n):
                if r + s < 2 * n - 2:
                    assert abs(U[s, r] - P[r][s]) < 1e-8


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_weight_vectors(n):
    R = spin_action(xq_matrix(n), n).matrix(1.0)
    for z in spinor_spectrum(n):
        v = spinor_weight_vector(z, n)
        assert abs(v[()] - 1) < 1e-12
        for S, c in v.items():
            lam = tuple(m - 1 for m in sorted(S, reverse=True) if m > 1)
            assert abs(c - ptilde_eval(lam, z)) < 1e-8
        w = weight_vector_in_clifford_basis(z, n)
        assert np.abs(R @ w - sum(z) / 2 * w).max() < 1e-8
