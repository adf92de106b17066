"""Command line: quantum products, invariant suites, operators and Apéry tables."""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from .classes import ONE, ClassVector, dumps, format_vector, vector_to_json
from .symfun.partitions import format_partition, parse_partition


class ExprError(ValueError):
    def __init__(self, text: str, position: int, message: str):
        super().__init__("%s at position %d in %r" % (message, position, text))
        self.position = position


_TOKEN = re.compile(r"(p|h|e|tau|s)(\d+)([+-]?)$")


def parse_class(text: str) -> Tuple[str, object]:
    """Class expression -> (kind, data).

    kinds: ("p", k), ("h", k), ("e", k), ("tau", partition), ("tau_top", None),
    ("label", quadric label), ("partition", partition).
    """
    s = "".join(text.split())
    if not s:
        raise ExprError(text, 0, "empty class expression")
    if s == "tau(n-1)":
        return "tau_top", None
    if s.startswith("tau("):
        try:
            return "tau", parse_partition(s[3:])
        except ValueError:
            raise ExprError(text, 3, "bad partition after tau") from None
    if s.startswith("("):
        try:
            return "partition", parse_partition(s)
        except ValueError:
            bad = next((i for i, ch in enumerate(s) if ch not in "0123456789,()"), len(s) - 1)
            raise ExprError(text, bad, "bad partition") from None
    m = _TOKEN.match(s)
    if not m:
        letters = re.match(r"[a-z]*", s).group(0)
        raise ExprError(text, len(letters) if letters in ("p", "h", "e", "tau", "s") else 0,
                        "expected p<k>, h<k>, e<k>, tau<k>, tau(n-1), s<k> or a partition")
    head, num, sign = m.groups()
    k = int(num)
    if head == "s":
        return "label", "s%d%s" % (k, sign)
    if sign:
        raise ExprError(text, len(head) + len(num), "unexpected sign")
    if head == "tau":
        return "tau", (k,) if k else ()
    return head, k


# ---------------------------------------------------------------- products


def _product_A(params, cls, times) -> Tuple[ClassVector, list]:
    from .symfun.symfunc import e as e_sym, h as h_sym, schur_in_h
    from .typea import Grassmannian, power_sum_rim_product, q_multiply_symfunc

    G = Grassmannian(*params)
    kind, data = cls
    lam = G.check(times)
    if kind == "p":
        return power_sum_rim_product(data, lam, G), G.basis()
    if kind == "h":
        return q_multiply_symfunc(h_sym(data), lam, G), G.basis()
    if kind == "e":
        return q_multiply_symfunc(e_sym(data), lam, G), G.basis()
    if kind == "partition":
        return q_multiply_symfunc(schur_in_h(G.check(data)), lam, G), G.basis()
    raise ValueError("class %s is not available on G(%d,%d)" % (kind, G.a, G.b))


def _product_OG(params, cls, times, tol) -> Tuple[ClassVector, list]:
    from .typed.spinor import (check_strict, schubert_basis, spinor_power_product,
                               spinor_spectral_product, spinor_tau_top_product)

    (n,) = params
    kind, data = cls
    lam = check_strict(times, n)
    basis = schubert_basis(n)
    if kind == "tau_top" or (kind == "tau" and data == (n - 1,)):
        return spinor_tau_top_product(lam, n), basis
    if kind == "p":
        if data % 2 == 0 or not 1 <= data <= 2 * n - 3:
            raise ValueError("p%d unsupported on OG(%d,%d): need odd 1 <= k <= %d" % (data, n, 2 * n, 2 * n - 3))
        return spinor_power_product((data + 1) // 2, lam, n), basis
    if kind == "tau" and data == (1,):
        return spinor_power_product(1, lam, n), basis
    if kind in ("tau", "partition"):
        return spinor_spectral_product(check_strict(data, n), lam, n, tol=tol), basis
    raise ValueError("class %s is not available on OG(%d,%d)" % (kind, n, 2 * n))


def _product_Q(params, cls, times_text, tol) -> Tuple[ClassVector, list]:
    from .typed.quadric import quadric_basis, quadric_qproduct

    (n,) = params
    basis = quadric_basis(n)
    kind, data = cls
    if kind == "h":
        kind, data = "label", "s1" if data == 1 else None
    if kind != "label" or data not in basis:
        raise ValueError("quadric classes are %s" % ", ".join(basis))
    other = "".join(times_text.split())
    if other not in basis:
        raise ValueError("quadric classes are %s" % ", ".join(basis))
    return quadric_qproduct({data: ONE}, {other: ONE}, n, tol=tol), basis


def cmd_qprod(args) -> Tuple[dict, bool]:
    from .qde import parse_space

    fam, params = parse_space(args.space)
    cls = parse_class(args.cls)
    if fam == "Q":
        vec, order = _product_Q(params, cls, args.times, args.tol)
        label = str
    else:
        kind, times = parse_class(args.times)
        if kind not in ("partition", "tau"):
            raise ExprError(args.times, 0, "--times must be a partition")
        if fam == "A":
            vec, order = _product_A(params, cls, times)
        else:
            vec, order = _product_OG(params, cls, times, args.tol)
        label = format_partition
    return {"result": vector_to_json(vec, label), "pretty": format_vector(vec, label, order)}, True


# ---------------------------------------------------------------- operators


def _space_from_args(args) -> str:
    sp = args.space.lower()
    if sp == "og":
        return "OG:%d" % args.n
    if sp == "q":
        return "Q:%d" % args.n
    if sp == "a":
        return "A:%d,%d" % (args.a, args.b)
    raise ValueError("--space must be one of a, q, og")


def cmd_qde(args) -> Tuple[dict, bool]:
    from .qde import hyperplane_matrix, lefschetz_transform, minimal_operator, regularize

    M = hyperplane_matrix(_space_from_args(args))
    L = minimal_operator(M, require_cyclic=not args.allow_noncyclic)
    out = {"space": _space_from_args(args), "minimal": {"operator": L.to_dict(), "factored": L.factored()}}
    cur = L
    if args.lefschetz:
        c, cur = lefschetz_transform(cur, args.lefschetz)
        out["lefschetz"] = {"codim": args.lefschetz, "stripped": c.with_var("D").to_strings(),
                            "operator": cur.to_dict(), "factored": cur.factored()}
    if args.regularize:
        c, cur = regularize(cur)
        out["regularized"] = {"stripped": c.with_var("D").to_strings(), "operator": cur.to_dict(),
                              "factored": cur.factored()}
    out["final"] = cur.factored()
    return out, True


def cmd_apery(args) -> Tuple[str, bool]:
    from .qde import zeta3_report

    rows = zeta3_report(max(args.n, 2), digits=args.digits)[: args.n + 1]
    lines = ["n\ta_n\tb_n_num\tb_n_den\tabs_zeta3_minus_6b_over_a"]
    for r in rows:
        b: Fraction = r["b"]
        lines.append("%d\t%d\t%d\t%d\t%s" % (r["n"], r["a"], b.numerator, b.denominator, r["error_str"]))
    return "\n".join(lines), True


def cmd_special(args) -> Tuple[dict, bool]:
    from .lie.centralizer import special_classes

    blocks = []
    for r in special_classes(args.group.upper()):
        blocks.append({
            "d": r.d,
            "y": {"+".join(str(c) for c in b): str(v) for b, v in sorted(r.y.coeffs.items())},
            "p": {w: str(c) for w, c in r.computed.items()},
            "printed": None if r.printed is None else {w: str(c) for w, c in r.printed.items()},
            "scalar": None if r.scalar is None else str(r.scalar),
            "match": r.matches,
            "note": r.note,
        })
    return {"group": args.group.upper(), "classes": blocks}, all(b["match"] for b in blocks)


def cmd_verify(args) -> Tuple[dict, bool]:
    from .verify import run_suite

    checks = run_suite(args.suite, seed=args.seed)
    rows = [c.to_dict() for c in checks]
    if not args.timing:
        for r in rows:
            r.pop("seconds")
    return {"suite": args.suite, "checks": rows, "passed": sum(c.passed for c in checks),
            "total": len(checks)}, all(c.passed for c in checks)


# ---------------------------------------------------------------- entry point


def _text(report) -> str:
    if isinstance(report, str):
        return report
    if "pretty" in report:
        return report["pretty"]
    if "final" in report:
        lines = ["minimal: " + report["minimal"]["factored"]]
        if "lefschetz" in report:
            lines.append("lefschetz(%d): %s" % (report["lefschetz"]["codim"], report["lefschetz"]["factored"]))
        if "regularized" in report:
            lines.append("regularized: " + report["regularized"]["factored"])
        return "\n".join(lines)
    if "checks" in report:
        return "\n".join("%s  %s" % ("PASS" if c["passed"] else "FAIL", c["name"]) for c in report["checks"])
    if "classes" in report:
        lines = []
        for b in report["classes"]:
            p = " ".join("%s*s%s" % (c, w) for w, c in b["p"].items())
            lines.append("p_%d = %s   [%s%s]" % (b["d"], p, "match, scalar %s" % b["scalar"] if b["match"] else "MISMATCH",
                                                 "; " + b["note"] if b["note"] else ""))
        return "\n".join(lines)
    return dumps(report)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qsatake", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    q = sub.add_parser("qprod", help="quantum product of a class with a Schubert class")
    q.add_argument("--space", required=True, help="A:a,b | Q:n | OG:n")
    q.add_argument("--class", dest="cls", required=True, help="p<k>, h<k>, e<k>, tau<k>, tau(n-1), s<k>, or a partition")
    q.add_argument("--times", required=True, help="Schubert class: partition, or a quadric label")
    q.add_argument("--tol", type=float, default=1e-6, help="rounding tolerance for spectral products")
    q.add_argument("--emit", choices=("json", "text"), default="json")
    q.set_defaults(fn=cmd_qprod)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("--suite", default="all", choices=("typeA", "quadric", "spinor", "e6", "e7", "satake", "qde", "semisimple", "all"))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds (breaks byte-identical output)")
    v.add_argument("--emit", choices=("json", "text"), default="json")
    v.set_defaults(fn=cmd_verify)

    d = sub.add_parser("qde", help="minimal quantum differential operator")
    d.add_argument("--space", required=True, help="a | q | og")
    d.add_argument("--n", type=int, default=5)
    d.add_argument("--a", type=int, default=1)
    d.add_argument("--b", type=int, default=1)
    d.add_argument("--lefschetz", type=int, default=0, metavar="CODIM")
    d.add_argument("--regularize", action="store_true")
    d.add_argument("--allow-noncyclic", action="store_true", help="return the operator of the unit's cyclic submodule")
    d.add_argument("--emit", choices=("json", "text"), default="json")
    d.set_defaults(fn=cmd_qde)

    a = sub.add_parser("apery", help="Apéry numbers and zeta(3) approximations (TSV)")
    a.add_argument("--n", type=int, default=20)
    a.add_argument("--digits", type=int, default=30)
    a.set_defaults(fn=cmd_apery, emit="text")

    s = sub.add_parser("special", help="special classes p_d for E6 or E7")
    s.add_argument("--group", default="E6", choices=("E6", "E7", "e6", "e7"))
    s.add_argument("--emit", choices=("json", "text"), default="json")
    s.set_defaults(fn=cmd_special)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, ok = args.fn(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(_text(report) if args.emit == "text" else dumps(report))
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
