"""Symmetric group characters by the Murnaghan-Nakayama rule."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence, Tuple

from .partitions import normalize, partitions_of, remove_border_rims
from .symfunc import SymFunc, power_sum_product


@lru_cache(maxsize=None)
def _mn(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    total = 0
    for nu, height in remove_border_rims(lam, mu[0]):
        total += (-1) ** height * _mn(nu, mu[1:])
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lam evaluated on the conjugacy class of cycle type mu."""
    lam, mu = normalize(lam), normalize(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch: |%s| != |%s|" % (lam, mu))
    return _mn(lam, mu)


def z_mu(mu: Sequence[int]) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    out = 1
    for part, mult in Counter(mu).items():
        out *= part ** mult * factorial(mult)
    return out


def schur_from_power_sums(lam: Sequence[int]) -> SymFunc:
    """s_lam = sum_mu chi^lam_mu p_mu / z_mu, expanded in the h basis."""
    lam = normalize(lam)
    out = SymFunc({}, "h")
    for mu in partitions_of(sum(lam)):
        chi = _mn(lam, mu)
        if chi:
            out = out + power_sum_product(mu) * Fraction(chi, z_mu(mu))
    return out
