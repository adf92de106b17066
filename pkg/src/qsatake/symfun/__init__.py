"""Partitions, border rims, symmetric functions, characters and P-tilde functions."""

from .partitions import (
    add_border_rims, remove_border_rims, parse_partition, format_partition,
    partitions_in_box, partitions_of, strict_partitions, conjugate,
)
from .symfunc import SymFunc, schur_in_h, schur_eval, power_sum_in_eh, e_in_h, h
from .characters import mn_character, z_mu, schur_from_power_sums
from .ptilde import PtildeTable, ptilde_build, ptilde_eval

__all__ = [
    "add_border_rims", "remove_border_rims", "parse_partition", "format_partition",
    "partitions_in_box", "partitions_of", "strict_partitions", "conjugate",
    "SymFunc", "schur_in_h", "schur_eval", "power_sum_in_eh", "e_in_h", "h",
    "mn_character", "z_mu", "schur_from_power_sums",
    "PtildeTable", "ptilde_build", "ptilde_eval",
]
