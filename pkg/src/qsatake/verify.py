"""Invariant suites.  Each check returns a Check record; failures are data."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import numpy as np

from .classes import ONE
from .symfun.symfunc import power_sum_in_eh


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}


def _timed(name: str, fn: Callable[[], tuple]) -> Check:
    t0 = time.perf_counter()
    passed, detail = fn()
    return Check(name, bool(passed), detail, time.perf_counter() - t0)


# ---------------------------------------------------------------- type A


def type_a_agreement(max_n: int = 7) -> Check:
    """Rim rule, quantum Pieri, ideal reduction and wedge action agree."""
    from .typea import (Grassmannian, ideal_reduce, power_sum_rim_product,
                        q_multiply_symfunc, wedge_xq_power)

    def run():
        cases = bad = 0
        first = None
        for n in range(2, max_n + 1):
            for a in range(1, n):
                G = Grassmannian(a, n - a)
                for lam in G.basis():
                    for ell in range(1, n):
                        p = power_sum_in_eh(ell)
                        routes = (
                            power_sum_rim_product(ell, lam, G),
                            q_multiply_symfunc(p, lam, G),
                            ideal_reduce(p, lam, G),
                            wedge_xq_power(ell, {lam: ONE}, G),
                        )
                        cases += 1
                        if any(r != routes[0] for r in routes[1:]):
                            bad += 1
                            first = first or "G(%d,%d) lam=%s ell=%d" % (a, n - a, lam, ell)
        return bad == 0, {"cases": cases, "failures": bad, "first_failure": first, "max_n": max_n}

    return _timed("typeA: rim = Pieri = ideal = wedge (a+b <= %d)" % max_n, run)


def type_a_basis_change(max_n: int = 6, tol: float = 1e-9) -> Check:
    from .typea import Grassmannian, satake_basis_change_check

    def run():
        worst = 0.0
        for n in range(2, max_n + 1):
            for a in range(1, n):
                worst = max(worst, satake_basis_change_check(Grassmannian(a, n - a), 1.0))
        return worst < tol, {"max_residual": worst, "tol": tol}

    return _timed("typeA: Satake basis change (a+b <= %d)" % max_n, run)


# ---------------------------------------------------------------- quadrics


def quadric_basis_change(max_n: int = 6, tol: float = 1e-8) -> Check:
    from .typed.quadric import quadric_eigenvector_check, quadric_satake_inverse_check

    def run():
        res = {n: quadric_satake_inverse_check(n, 1.0) for n in range(3, max_n + 1)}
        eig = max(quadric_eigenvector_check(n, 1.0) for n in range(3, max_n + 1))
        worst = max(res.values())
        return worst < tol and eig < tol, {"max_residual": worst, "eigenvector_residual": eig, "tol": tol}

    return _timed("quadric: eigenvector inverse = spectral matrix (n <= %d)" % max_n, run)


def quadric_hyperplane_spectral(max_n: int = 5) -> Check:
    """Exact hyperplane matrix against spectral products h * s_k."""
    from .typed.quadric import quadric_basis, quadric_hyperplane_matrix, quadric_qproduct

    def run():
        bad = []
        for n in range(3, max_n + 1):
            basis = quadric_basis(n)
            M = quadric_hyperplane_matrix(n)
            for j, lab in enumerate(basis):
                exact = {basis[i]: M[i][j] for i in range(len(basis)) if M[i][j]}
                if quadric_qproduct({"s1": ONE}, {lab: ONE}, n) != exact:
                    bad.append("n=%d %s" % (n, lab))
        return not bad, {"failures": bad}

    return _timed("quadric: hyperplane matrix = spectral products (n <= %d)" % max_n, run)


# ---------------------------------------------------------------- spinor varieties


def spinor_products(max_n: int = 6, tol: float = 1e-6) -> Check:
    from .typed.spinor import (power_sum_spectral_product, schubert_basis,
                               spinor_power_product, tau_top_by_action, tau_top_formula)

    def run():
        cases = bad = top_bad = 0
        worst = 0.0
        for n in range(2, max_n + 1):
            for lam in schubert_basis(n):
                if tau_top_formula(lam, n) != tau_top_by_action(lam, n):
                    top_bad += 1
                for r in range(1, n):
                    if 2 * r - 1 > 2 * n - 3:
                        break
                    cases += 1
                    via_spectrum, res = power_sum_spectral_product(r, lam, n, tol=tol, return_residual=True)
                    worst = max(worst, res)
                    if via_spectrum != spinor_power_product(r, lam, n):
                        bad += 1
        ok = bad == 0 and top_bad == 0 and worst < tol
        return ok, {"power_cases": cases, "power_failures": bad, "max_rounding_residual": worst,
                    "tau_top_failures": top_bad, "tol": tol}

    return _timed("spinor: Lie action = spectral products, tau_(n-1) formula (n <= %d)" % max_n, run)


def spinor_weight_vectors(max_n: int = 5, tol: float = 1e-8) -> Check:
    from .typed.spinor import (spin_action, spinor_spectrum, spinor_weight_vector,
                               weight_vector_in_clifford_basis)
    from .typed.somatrix import xq_matrix
    from .symfun.ptilde import ptilde_eval

    def run():
        w_pt = w_eig = 0.0
        for n in range(2, max_n + 1):
            R = spin_action(xq_matrix(n), n).matrix(1.0)
            for z in spinor_spectrum(n):
                for S, c in spinor_weight_vector(z, n).items():
                    lam = tuple(m - 1 for m in sorted(S, reverse=True) if m > 1)
                    w_pt = max(w_pt, abs(c - ptilde_eval(lam, z)))
                v = weight_vector_in_clifford_basis(z, n)
                w_eig = max(w_eig, float(np.max(np.abs(R @ v - sum(z) / 2 * v))))
        return max(w_pt, w_eig) < tol, {"ptilde_residual": w_pt, "eigen_residual": w_eig, "tol": tol}

    return _timed("spinor: Pfaffian weight vectors (n <= %d)" % max_n, run)


# ---------------------------------------------------------------- exceptional


def exceptional(name: str, seed: int = 0, samples: int = 200) -> List[Check]:
    from .lie.centralizer import (ad_matrix, centralizer_dimension, centralizer_q_basis,
                                  exponent_profile, special_classes, x_q_element)
    from .lie.chevalley import chevalley_basis
    from .lie.minuscule import minuscule_module
    from .lie.roots import build_root_system, height

    rs = build_root_system(name)
    module = minuscule_module(rs, 1)
    basis = chevalley_basis(module)
    checks = []

    def profile():
        got = exponent_profile(basis)
        want = {d: rs.exponents().count(d) for d in range(1, rs.coxeter_number)}
        return got == want, {"profile": {str(k): v for k, v in got.items() if v}, "exponents": list(rs.exponents())}

    checks.append(_timed("%s: centralizer dimension per height" % name, profile))

    def plists():
        reports = special_classes(name)
        rows = {}
        for r in reports:
            rows[str(r.d)] = {
                "computed": {w: str(c) for w, c in r.computed.items()},
                "printed": {w: str(c) for w, c in (r.printed or {}).items()},
                "scalar": None if r.scalar is None else str(r.scalar),
                "note": r.note,
            }
        matched = sum(r.matches for r in reports)
        return matched == len(reports), {"matched": "%d/%d" % (matched, len(reports)), "classes": rows}

    checks.append(_timed("%s: p_d lists match printed lists up to scalar" % name, plists))

    def zq():
        h = rs.coxeter_number
        els = centralizer_q_basis(basis)
        ok = all(height(g) == h - y.d for y in els for g in (y.z or {}))
        xq = x_q_element(basis, 1)
        dim_c = centralizer_dimension(basis, xq)
        rep = _eigen(ad_matrix(basis, xq))
        ok = ok and dim_c == rs.rank and rep["diagonalizable_residual"] < 1e-8
        return ok, {"centralizer_dim": dim_c, "rank": rs.rank, "ad_diagonalizable_residual": rep["diagonalizable_residual"]}

    checks.append(_timed("%s: q-corrections and regular semisimple x_q" % name, zq))

    def jacobi():
        rng = random.Random(seed)
        labels = basis.labels
        bad = 0
        for _ in range(samples):
            a, b, c = (basis.basis_element(rng.choice(labels)) for _ in range(3))
            br = basis.bracket
            total: Dict = {}
            for term in (br(a, br(b, c)), br(b, br(c, a)), br(c, br(a, b))):
                for k, v in term.items():
                    total[k] = total.get(k, 0) + v
            if any(total.values()):
                bad += 1
        return bad == 0, {"samples": samples, "failures": bad, "seed": seed}

    checks.append(_timed("%s: Jacobi identity on random triples" % name, jacobi))
    return checks


# ---------------------------------------------------------------- semisimplicity


def _eigen(M: np.ndarray) -> dict:
    from .typea import eigen_report

    rep = eigen_report(M)
    rep.pop("eigenvalues")
    return rep


def hyperplane_spaces() -> Dict[str, np.ndarray]:
    """Hyperplane multiplication at q = 1 for every space covered by the suites."""
    from .lie.centralizer import x_q_element
    from .lie.chevalley import chevalley_basis
    from .lie.minuscule import minuscule_module
    from .lie.roots import build_root_system
    from .typea import Grassmannian, hyperplane_matrix, numeric_matrix
    from .typed.quadric import quadric_hyperplane_matrix
    from .typed.spinor import spinor_hyperplane_matrix

    out = {}
    for n in range(2, 8):
        for a in range(1, n):
            out["G(%d,%d)" % (a, n - a)] = numeric_matrix(hyperplane_matrix(Grassmannian(a, n - a)), 1.0)
    for n in range(3, 7):
        out["Q^%d" % (2 * n - 2)] = numeric_matrix(quadric_hyperplane_matrix(n), 1.0)
    for n in range(2, 7):
        out["OG(%d,%d)" % (n, 2 * n)] = numeric_matrix(spinor_hyperplane_matrix(n), 1.0)
    for name in ("E6", "E7"):
        basis = chevalley_basis(minuscule_module(build_root_system(name), 1))
        out[name + "/P1"] = basis.matrix(x_q_element(basis, 1)).astype(complex)
    return out


def semisimplicity(gap: float = 1e-8) -> List[Check]:
    """Literal distinct-eigenvalue test and the weaker diagonalizability test."""
    reports = {name: _eigen(M) for name, M in hyperplane_spaces().items()}
    repeated = sorted(k for k, r in reports.items() if r["min_gap"] <= gap)
    non_diag = sorted(k for k, r in reports.items() if r["diagonalizable_residual"] > 1e-8)
    return [
        Check("semisimplicity: pairwise distinct eigenvalues (gap > %g)" % gap, not repeated,
              {"spaces": len(reports), "repeated_eigenvalues": repeated}),
        Check("semisimplicity: square-free minimal polynomial", not non_diag,
              {"spaces": len(reports), "not_diagonalizable": non_diag}),
    ]


# ---------------------------------------------------------------- QDE


def qde_pipeline() -> List[Check]:
    from fractions import Fraction

    from .qde import (apery_operator, apery_sequences, hyperplane_matrix, lcm_upto,
                      lefschetz_transform, minimal_operator, regularize, unit_series,
                      zeta3_enclosure)

    def pipeline():
        M = hyperplane_matrix("OG:5")
        L = minimal_operator(M)
        c, V = lefschetz_transform(L, 7)
        c2, A = regularize(V)
        series = unit_series(M, 20)
        ok = A == apery_operator() and not any(L.apply_series(series))
        return ok, {"minimal": L.factored(), "stripped": c.with_var("D").__str__(), "section": V.factored(),
                    "regularized": A.factored()}

    def apery():
        a, b = apery_sequences(20)
        dens = all((12 * lcm_upto(n) ** 3) % b[n].denominator == 0 for n in range(1, 21))
        lo, hi = zeta3_enclosure()
        err = abs((lo + hi) / 2 - 6 * b[10] / a[10]) + (hi - lo) / 2
        ok = dens and a[:2] == [1, 5] and err < Fraction(1, 10 ** 10)
        return ok, {"a_2": a[2], "a_3": a[3], "denominators_ok": dens, "error_bound_n10": float(err)}

    return [_timed("qde: OG(5,10) -> Apery operator", pipeline), _timed("qde: Apery numbers", apery)]


# ---------------------------------------------------------------- suites


SUITES = ("typeA", "quadric", "spinor", "e6", "e7", "satake", "qde", "semisimple", "all")


def run_suite(suite: str, seed: int = 0) -> List[Check]:
    if suite not in SUITES:
        raise ValueError("unknown suite %r; choose from %s" % (suite, ", ".join(SUITES)))
    if suite == "all":
        return [c for s in ("typeA", "quadric", "spinor", "e6", "e7", "qde", "semisimple") for c in run_suite(s, seed)]
    if suite == "typeA":
        return [type_a_agreement(), type_a_basis_change()]
    if suite == "quadric":
        return [quadric_basis_change(), quadric_hyperplane_spectral()]
    if suite == "spinor":
        return [spinor_products(), spinor_weight_vectors()]
    if suite in ("e6", "e7"):
        return exceptional(suite.upper(), seed)
    if suite == "satake":
        return [type_a_basis_change(), quadric_basis_change()]
    if suite == "qde":
        return qde_pipeline()
    return semisimplicity()
