"""Quantum differential operators: from the hyperplane matrix to the Apéry numbers.

The pipeline is

    hyperplane matrix M(t)  ->  minimal operator annihilating the unit
    ->  linear-section transform (multiply the t^i coefficient by
        prod_{j<=i} (D+j)^c and strip)  ->  regularization  ->  recurrence.

Columns of M are images of basis classes, and the cyclic iteration is
v_{k+1} = t v_k' + M v_k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, lcm, sqrt
from typing import Dict, List, Sequence, Tuple

from .algebra.linalg import minimal_dependence, rank
from .algebra.ore import OreOperator, left_strip
from .algebra.poly import Poly
from .algebra.ratfunc import RatFunc
from .typea import Grassmannian, hyperplane_matrix as grassmannian_matrix
from .typed.quadric import quadric_basis, quadric_hyperplane_matrix
from .typed.spinor import schubert_basis, spinor_hyperplane_matrix


class CyclicityError(ValueError):
    def __init__(self, span: int, dim: int):
        super().__init__("cyclic vector spans %d of %d dimensions" % (span, dim))
        self.span = span
        self.dim = dim


@dataclass(frozen=True)
class ConnectionMatrix:
    labels: Tuple
    entries: Tuple[Tuple[Poly, ...], ...]  # entries[i][j]: coefficient of labels[i] in h * labels[j]

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def column(self, label) -> List[Poly]:
        j = self.labels.index(label)
        return [row[j] for row in self.entries]

    def part(self, k: int) -> List[List[Fraction]]:
        """Coefficient matrix of t^k."""
        return [[p[k] for p in row] for row in self.entries]

    def rows_as_strings(self) -> List[List[str]]:
        return [[str(p) if p else "0" for p in row] for row in self.entries]


def _as_t(M) -> Tuple[Tuple[Poly, ...], ...]:
    return tuple(tuple(p.with_var("t") if p else Poly((), "t") for p in row) for row in M)


def og_basis_order(n: int) -> List[Tuple[int, ...]]:
    """Strict partitions by degree, reverse-lexicographic within a degree."""
    return sorted(schubert_basis(n), key=lambda lam: (sum(lam), tuple(-p for p in lam)))


def parse_space(desc: str) -> Tuple[str, Tuple[int, ...]]:
    """'A:2,3', 'Q:4', 'OG:5' (family case-insensitive)."""
    m = re.fullmatch(r"\s*([A-Za-z]+)\s*:\s*([\d,\s]+)", desc)
    if not m:
        raise ValueError("cannot parse space %r; expected e.g. A:2,3, Q:4, OG:5" % desc)
    fam = m.group(1).upper()
    params = tuple(int(x) for x in m.group(2).split(",") if x.strip())
    need = {"A": 2, "Q": 1, "OG": 1}
    if fam not in need:
        raise ValueError("unsupported family %r" % m.group(1))
    if len(params) != need[fam]:
        raise ValueError("%s takes %d parameter(s)" % (fam, need[fam]))
    return fam, params


def hyperplane_matrix(space) -> ConnectionMatrix:
    """Matrix of multiplication by the hyperplane class, with q renamed t.

    ``space`` is a descriptor string or a (family, params) pair.  Quadric
    labels are the strings of ``quadric_basis``; for OG(n, 2n) the basis is
    ordered by ``og_basis_order``.
    """
    fam, params = parse_space(space) if isinstance(space, str) else space
    if fam == "A":
        G = Grassmannian(*params)
        return ConnectionMatrix(tuple(G.basis()), _as_t(grassmannian_matrix(G)))
    if fam == "Q":
        (n,) = params
        return ConnectionMatrix(tuple(quadric_basis(n)), _as_t(quadric_hyperplane_matrix(n)))
    if fam == "OG":
        (n,) = params
        if n < 2:
            raise ValueError("OG(n, 2n) needs n >= 2")
        M = spinor_hyperplane_matrix(n)
        native = schubert_basis(n)
        order = og_basis_order(n)
        pos = [native.index(lam) for lam in order]
        return ConnectionMatrix(tuple(order), _as_t([[M[i][j] for j in pos] for i in pos]))
    raise ValueError("unsupported family %r" % fam)


# ---------------------------------------------------------------- minimal operator


def cyclic_vectors(M: ConnectionMatrix, start, count: int) -> List[List[RatFunc]]:
    dim = M.dimension
    v = [RatFunc(Poly([int(i == start)], "t")) for i in range(dim)]
    mats = [[RatFunc(p) for p in row] for row in M.entries]
    t = RatFunc(Poly([0, 1], "t"))
    out = [v]
    for _ in range(count - 1):
        nxt = []
        for i in range(dim):
            acc = t * v[i].derivative()
            for j in range(dim):
                if mats[i][j] and v[j]:
                    acc = acc + mats[i][j] * v[j]
            nxt.append(acc)
        v = nxt
        out.append(v)
    return out


def _span(vectors) -> int:
    return rank([list(v) for v in vectors])


def minimal_operator(M: ConnectionMatrix, cyclic=None, require_cyclic: bool = True) -> OreOperator:
    """Operator L(t, D) with the smallest D-order such that L * v_0 = 0.

    ``cyclic`` is a basis label (default: the first label, the unit class).
    With ``require_cyclic`` a vector that does not generate raises
    CyclicityError carrying the span dimension.
    """
    labels = M.labels
    start = 0 if cyclic is None else labels.index(cyclic)
    vecs = cyclic_vectors(M, start, M.dimension + 1)
    dep = minimal_dependence(vecs)
    order = len(dep) - 1
    if require_cyclic and order < M.dimension:
        raise CyclicityError(order, M.dimension)
    terms: Dict[int, Poly] = {}
    for k, c in enumerate(dep):
        for i, a in enumerate(c.coeffs):
            if a:
                terms[i] = terms.get(i, Poly((), "D")) + Poly.monomial(k, a, "D")
    return OreOperator(terms).normalized()


# ---------------------------------------------------------------- section and regularization


def _rising(i: int, power: int) -> Poly:
    out = Poly([1], "D")
    for j in range(1, i + 1):
        out = out * Poly([j, 1], "D") ** power
    return out


def section_transform(L: OreOperator, power: int) -> OreOperator:
    """Multiply the t^i coefficient on the right by prod_{j=1}^{i} (D+j)^power."""
    if power < 0:
        raise ValueError("power must be non-negative")
    return L.map_coeffs(lambda i, p: p * _rising(i, power))


def lefschetz_transform(L: OreOperator, codim: int, multiplicity: int = 1) -> Tuple[Poly, OreOperator]:
    """(stripped left factor, operator) for a section of the given codimension."""
    if codim < 0 or multiplicity < 1:
        raise ValueError("codim must be >= 0 and multiplicity >= 1")
    c, rest = left_strip(section_transform(L, codim * multiplicity))
    return c, rest.normalized()


def regularize(L: OreOperator) -> Tuple[Poly, OreOperator]:
    c, rest = left_strip(section_transform(L, 1))
    return c, rest.normalized()


def apery_operator() -> OreOperator:
    D = OreOperator.D()
    t = OreOperator.t()
    return D ** 3 - t * (2 * D + 1) * (17 * D * D + 17 * D + 5) + t * t * (D + 1) ** 3


# ---------------------------------------------------------------- recurrences


@dataclass(frozen=True)
class Recurrence:
    """sum_j coeffs[j](n) * u_{n-j} = 0."""

    coeffs: Tuple[Poly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def solve(self, initial: Sequence, N: int) -> List[Fraction]:
        """u_0..u_N from the given initial values; the recurrence is used for
        n >= len(initial)."""
        u = [Fraction(x) for x in initial][: N + 1]
        for n in range(len(u), N + 1):
            lead = self.coeffs[0](Fraction(n))
            if lead == 0:
                raise ZeroDivisionError("leading coefficient vanishes at n=%d" % n)
            s = sum((self.coeffs[j](Fraction(n)) * u[n - j] for j in range(1, len(self.coeffs)) if n - j >= 0), Fraction(0))
            u.append(-s / lead)
        return u

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            u = "u_n" if j == 0 else "u_{n-%d}" % j
            parts.append("(%s)*%s" % (c, u))
        return " + ".join(parts) + " = 0"


def operator_to_recurrence(L: OreOperator) -> Recurrence:
    k = max(L.t_degree, 0)
    return Recurrence(tuple(L.coeff(i).shift(-i).with_var("n") for i in range(k + 1)))


def apery_recurrence() -> Recurrence:
    return operator_to_recurrence(apery_operator())


def apery_binomial(n: int) -> int:
    return sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))


def apery_sequences(N: int) -> Tuple[List[int], List[Fraction]]:
    if N < 1:
        raise ValueError("N must be at least 1")
    rec = apery_recurrence()
    a = rec.solve([1, 5], N)
    b = rec.solve([0, 1], N)
    out = []
    for n, x in enumerate(a):
        if x.denominator != 1:
            raise ArithmeticError("a_%d = %s is not an integer" % (n, x))
        if x != apery_binomial(n):
            raise ArithmeticError("a_%d disagrees with the binomial sum" % n)
        out.append(int(x))
    return out, b


def lcm_upto(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out = lcm(out, k)
    return out


# ---------------------------------------------------------------- zeta(3)


def bernoulli_even(m: int) -> List[Fraction]:
    """[B_0, B_1, ..., B_{2m}] with B_1 = -1/2."""
    B = [Fraction(1)]
    for k in range(1, 2 * m + 1):
        B.append(-sum(comb(k + 1, j) * B[j] for j in range(k)) / (k + 1))
    return B


def zeta3_enclosure(K: int = 40, m: int = 20) -> Tuple[Fraction, Fraction]:
    """Rational lo < zeta(3) < hi.

    sum_{k<K} k^-3 is exact; the tail from K uses Euler-Maclaurin.  For the
    completely monotone x^-3 the remainder after m correction terms is bounded
    in absolute value by the next term.
    """
    B = bernoulli_even(m + 1)
    s = sum((Fraction(1, k ** 3) for k in range(1, K)), Fraction(0))
    s += Fraction(1, 2 * K * K) + Fraction(1, 2 * K ** 3)
    for j in range(1, m + 1):
        s += B[2 * j] * (2 * j + 1) / 2 / Fraction(K) ** (2 * j + 2)
    err = abs(B[2 * m + 2] * (2 * m + 3) / 2 / Fraction(K) ** (2 * m + 4))
    return s - err, s + err


def _decimal(x: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(x.numerator) / Decimal(x.denominator)


def zeta3_decimal(digits: int = 30) -> Decimal:
    lo, hi = zeta3_enclosure()
    if hi - lo > Fraction(1, 10 ** (digits + 5)):
        raise ArithmeticError("enclosure too wide for %d digits" % digits)
    return _decimal((lo + hi) / 2, digits)


def zeta3_report(N: int, digits: int = 30) -> List[dict]:
    """Rows n, a_n, b_n, |zeta(3) - 6 b_n/a_n| and a_{n+1}/a_n."""
    if N < 2:
        raise ValueError("N must be at least 2")
    a, b = apery_sequences(N + 1)
    lo, hi = zeta3_enclosure()
    mid = (lo + hi) / 2
    rows = []
    for n in range(N + 1):
        err = abs(mid - 6 * b[n] / a[n])
        rows.append({
            "n": n,
            "a": a[n],
            "b": b[n],
            "error": err,
            "error_str": "%.6E" % _decimal(err, digits),
            "error_bound": err + (hi - lo) / 2,
            "ratio": Fraction(a[n + 1], a[n]),
        })
    return rows


APERY_ALPHA = 17 + 12 * sqrt(2)


# ---------------------------------------------------------------- series checks


def series_solution(M: ConnectionMatrix, order: int) -> List[List[Fraction]]:
    """Row-vector solution psi = sum psi_n t^n of D psi = psi M with psi_0 the
    dual of the first basis class; returns psi_0..psi_order.

    Only t-degree <= 1 entries are supported (as for minuscule spaces).
    """
    if any(p.degree > 1 for row in M.entries for p in row):
        raise ValueError("series_solution needs entries of t-degree <= 1")
    dim = M.dimension
    M0, M1 = M.part(0), M.part(1)
    psi0 = [Fraction(int(i == 0)) for i in range(dim)]
    if any(sum(psi0[i] * M0[i][j] for i in range(dim)) for j in range(dim)):
        raise ValueError("first basis class is not dual to the cokernel of M(0)")
    from .algebra.linalg import solve

    out = [psi0]
    for n in range(1, order + 1):
        prev = out[-1]
        rhs = [sum(prev[i] * M1[i][j] for i in range(dim)) for j in range(dim)]
        # psi_n (n I - M0) = rhs, i.e. (n I - M0)^T psi_n^T = rhs^T
        A = [[(Fraction(n) if i == j else Fraction(0)) - M0[j][i] for j in range(dim)] for i in range(dim)]
        out.append(solve(A, rhs))
    return out


def unit_series(M: ConnectionMatrix, order: int) -> List[Fraction]:
    """Coefficients of <psi, unit class> for the series solution."""
    return [psi[0] for psi in series_solution(M, order)]
