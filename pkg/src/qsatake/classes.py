"""Sparse class vectors: label -> polynomial in q."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Dict, Hashable

from .algebra.poly import Poly, format_terms

Q = Poly([0, 1], "q")
ONE = Poly([1], "q")
ZERO = Poly((), "q")

ClassVector = Dict[Hashable, Poly]


def qpoly(x) -> Poly:
    if isinstance(x, Poly):
        return x.with_var("q")
    return Poly([Fraction(x)], "q")


def qpow(k: int, c=1) -> Poly:
    return Poly.monomial(k, c, "q")


def add_term(vec: ClassVector, label, coeff) -> None:
    c = vec.get(label, ZERO) + qpoly(coeff)
    if c:
        vec[label] = c
    else:
        vec.pop(label, None)


def combine(*pairs) -> ClassVector:
    """Sum of coeff * vector over (coeff, vector) pairs."""
    out: ClassVector = {}
    for coeff, vec in pairs:
        c = qpoly(coeff)
        for label, v in vec.items():
            add_term(out, label, c * v)
    return out


def scale(vec: ClassVector, coeff) -> ClassVector:
    return combine((coeff, vec))


def coeff_string(p: Poly) -> str:
    return format_terms(p.coeffs, "q")


def _coeff_prefix(p: Poly):
    """(sign, prefix) so that a term reads sign + prefix + label."""
    neg = p.lc < 0
    m = -p if neg else p
    if m == ONE:
        return neg, ""
    if m.is_monomial():
        k = m.degree
        c = m.lc
        mono = "q" if k == 1 else ("q^%d" % k if k else "")
        if c == 1:
            return neg, mono + "·"
        return neg, (str(c) + (mono if mono else "")) + "·"
    return neg, "(%s)·" % format_terms(m.coeffs, "q")


def format_vector(vec: ClassVector, label_str: Callable = str, order=None) -> str:
    """Readable expansion such as "(2,2) + q·()"."""
    if not vec:
        return "0"
    keys = list(vec)
    if order is not None:
        rank = {k: i for i, k in enumerate(order)}
        keys.sort(key=lambda k: (min(i for i, a in enumerate(vec[k].coeffs) if a), rank.get(k, len(rank))))
    parts = []
    for k in keys:
        neg, pre = _coeff_prefix(vec[k])
        body = pre + label_str(k)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def vector_to_json(vec: ClassVector, label_str: Callable = str) -> dict:
    return {label_str(k): coeff_string(v) for k, v in vec.items()}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
