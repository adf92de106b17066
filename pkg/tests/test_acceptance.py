"""One pass/fail line per acceptance criterion.

Run ``pytest tests/test_acceptance.py -v`` (lines are printed even without -s),
or ``python3 tests/test_acceptance.py`` for the bare summary.
Criteria 8 and 9 are known to fail literally and are strict xfails; their
lines print FAIL with the reason.
"""

import random
import sys
import time
from fractions import Fraction

import mpmath
import pytest

from qsatake.algebra import OreOperator, Poly, det, left_strip, pfaffian
from qsatake.classes import ZERO, qpoly
from qsatake.qde import (apery_binomial, apery_operator, apery_sequences, hyperplane_matrix, lcm_upto,
                         lefschetz_transform, minimal_operator, regularize, zeta3_enclosure)
from qsatake.symfun import mn_character, partitions_of, z_mu
from qsatake.typed.somatrix import bracket
from qsatake.typed.spinor import spin_action
from qsatake import verify

D, t = OreOperator.D(), OreOperator.t()

# OG(5,10) hyperplane matrix as printed, rows in the Schubert basis order
# (), 1, 2, 3, 21, 4, 31, 41, 32, 42, 321, 43, 421, 431, 432, 4321
PRINTED_M = [
    "00000000000t0000", "1000000000000t00", "01000000000000t0", "0010000000000000",
    "001000000000000t", "0001000000000000", "0001100000000000", "0000011000000000",
    "0000001000000000", "0000000110000000", "0000000010000000", "0000000001000000",
    "0000000001100000", "0000000000011000", "0000000000000100", "0000000000000010",
]
APERY = D ** 3 - t * (2 * D + 1) * (17 * D * D + 17 * D + 5) + t * t * (D + 1) ** 3


def _emit(capsys, num, ok, text, seconds):
    line = "criterion %2d %s  %s  [%.2fs]" % (num, "PASS" if ok else "FAIL", text, seconds)
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def _run(capsys, num, fn):
    t0 = time.perf_counter()
    ok, text, limit = fn()
    sec = time.perf_counter() - t0
    if limit is not None and sec >= limit:
        ok, text = False, text + "; over the %gs budget" % limit
    _emit(capsys, num, ok, text, sec)
    return ok


def c1():
    rows = ["".join(r) for r in hyperplane_matrix("OG:5").rows_as_strings()]
    return rows == PRINTED_M, "OG(5,10) matrix equals the printed 16x16 matrix", 1.0


def c2():
    L = minimal_operator(hyperplane_matrix("OG:5"))
    want = D ** 11 * (D - 1) ** 5 - t * D ** 5 * (2 * D + 1) * (17 * D * D + 17 * D + 5) + t * t
    return L == want, "minimal operator %s" % L.factored(), 5.0


def c3():
    L = minimal_operator(hyperplane_matrix("OG:5"))
    c, V = lefschetz_transform(L, 7)
    _, A = regularize(V)
    ok = (c == Poly([1], "D") * Poly([0, 1], "D") ** 7 * Poly([-1, 1], "D") ** 5
          and V == D ** 4 - t * (2 * D + 1) * (17 * D * D + 17 * D + 5) + t * t * (D + 1) ** 2
          and A == APERY and apery_operator() == APERY)
    return ok, "stripped %s; section %s; regularized %s" % (c.with_var("D"), V.factored(), A.factored()), None


def c4():
    a, b = apery_sequences(20)
    binom = all(a[n] == apery_binomial(n) for n in range(21))
    dens = all((12 * lcm_upto(n) ** 3) % b[n].denominator == 0 for n in range(1, 21))
    lo, hi = zeta3_enclosure()
    with mpmath.workdps(80):
        inside = lo <= Fraction(str(mpmath.zeta(3))) <= hi
    err = max(abs(lo - 6 * b[10] / a[10]), abs(hi - 6 * b[10] / a[10]))
    ok = binom and dens and a[:2] == [1, 5] and hi - lo < Fraction(1, 10 ** 30) and inside and err < Fraction(1, 10 ** 10)
    return ok, ("a_n = binomial sum (n<=20), b_n denominators | 12 lcm^3, zeta(3) enclosure width %.1e, "
                "|zeta(3) - 6 b10/a10| <= %.2e" % (float(hi - lo), float(err))), 1.0


def c5():
    chk = verify.type_a_agreement(7)
    return chk.passed, "%d cases, %d disagreements across rim/Pieri/ideal/wedge" % (
        chk.detail["cases"], chk.detail["failures"]), 60.0


def c6():
    chk = verify.spinor_products(6, 1e-6)
    d = chk.detail
    return chk.passed, "%d power products, max rounding residual %.1e, tau_(n-1) mismatches %d" % (
        d["power_cases"], d["max_rounding_residual"], d["tau_top_failures"]), None


def c7():
    quad = verify.quadric_basis_change(6, 1e-8)
    typa = verify.type_a_basis_change(6, 1e-9)
    return quad.passed and typa.passed, "quadric residual %.1e (< 1e-8), type A residual %.1e (< 1e-9)" % (
        quad.detail["max_residual"], typa.detail["max_residual"]), None


def c8():
    checks = verify.exceptional("E6") + verify.exceptional("E7")
    byname = {c.name: c for c in checks}
    e6 = byname["E6: p_d lists match printed lists up to scalar"].detail
    e7 = byname["E7: p_d lists match printed lists up to scalar"].detail
    literal = (e6["classes"]["4"]["computed"] == {"5431": "1", "2431": "-1"}
               and e7["classes"]["5"]["computed"] == {"54321": "-3", "64321": "2"})
    profiles = all(byname["%s: centralizer dimension per height" % g].passed for g in ("E6", "E7"))
    bad = ["E7 d=%s: %s" % (d, r["note"]) for d, r in e7["classes"].items() if r["note"] and "length" in r["note"]]
    ok = profiles and literal and all(c.passed for c in checks)
    text = "profiles %s; E6 %s, E7 %s matched" % ("ok" if profiles else "MISMATCH", e6["matched"], e7["matched"])
    if bad:
        text += "; " + "; ".join(bad)
    return ok, text, 30.0


def c9():
    literal, diag = verify.semisimplicity(1e-8)
    rep = literal.detail["repeated_eigenvalues"]
    text = "%d spaces; repeated eigenvalues in %d (%s); diagonalizable: %s" % (
        literal.detail["spaces"], len(rep), ", ".join(rep),
        "all" if diag.passed else ", ".join(diag.detail["not_diagonalizable"]))
    return literal.passed, text, None


def c10():
    rng = random.Random(0)

    def ore():
        return OreOperator({k: Poly([rng.randint(-5, 5) for _ in range(rng.randint(0, 4))], "D")
                            for k in range(rng.randint(0, 3))})

    assoc = all((a * b) * c == a * (b * c) for a, b, c in ((ore(), ore(), ore()) for _ in range(100)))
    strip = True
    for _ in range(100):
        L = ore()
        if not L:
            continue
        c = Poly([1], "D")
        for _ in range(rng.randint(1, 3)):
            c = c * Poly([rng.randint(-3, 3), 1], "D")
        prod = OreOperator.from_dpoly(c) * L
        f, rest = left_strip(prod)
        strip = strip and OreOperator.from_dpoly(f) * rest == prod and divmod(f, c)[1] == 0
    pf = True
    for _ in range(100):
        n = 2 * rng.randint(1, 4)
        A = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                A[i][j], A[j][i] = v, -v
        pf = pf and pfaffian(A) ** 2 == det(A)
    mn = True
    for n in range(1, 8):
        parts = partitions_of(n)
        for lam in parts:
            for nu in parts:
                s = sum(Fraction(mn_character(lam, mu) * mn_character(nu, mu), z_mu(mu)) for mu in parts)
                mn = mn and s == (1 if lam == nu else 0)
    rep = True
    for n in (2, 3, 4):
        N = 2 * n
        for _ in range(10):
            X, Y = [], []
            for M in (X, Y):
                M.extend([ZERO] * N for _ in range(N))
                for i in range(N):
                    for j in range(N - 1 - i):
                        v = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                        M[i][j], M[N - 1 - j][N - 1 - i] = qpoly(v), qpoly(-v)
            sx, sy = spin_action(X, n), spin_action(Y, n)
            rep = rep and sx.compose(sy) - sy.compose(sx) == spin_action(bracket(X, Y), n)
    flags = {"Ore associativity": assoc, "strip round-trip": strip, "Pf^2 = det": pf,
             "MN orthogonality (n<=7)": mn, "spin representation": rep}
    return all(flags.values()), ", ".join("%s %s" % (k, "ok" if v else "FAILED") for k, v in flags.items()), None


CRITERIA = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10]
KNOWN_RED = {
    8: "the printed E7 p_17 word has 15 letters, so no list of length-17 words can match it",
    9: "hyperplane multiplication has repeated eigenvalues on several spaces; it is still diagonalizable",
}


@pytest.mark.parametrize("num", range(1, 11), ids=lambda n: "criterion_%d" % n)
def test_criterion(num, capsys, request):
    if num in KNOWN_RED:
        request.applymarker(pytest.mark.xfail(reason=KNOWN_RED[num], strict=True))
    assert _run(capsys, num, CRITERIA[num - 1])


if __name__ == "__main__":
    results = [_run(None, i + 1, fn) for i, fn in enumerate(CRITERIA)]
    sys.exit(0 if all(results) else 1)
