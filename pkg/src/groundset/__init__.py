"""
Ground-set constructions
Latin-square extremal families, pair covers, pair packings and splitting
"""

from .models import SetFamily, intersection_graph, max_multiplicity
from .latin import is_prime, latin_squares, is_latin_square, are_orthogonal, mols_family
from .designs import (
    STEINER_TRIPLE_SYSTEMS, steiner_triple_system, pair_counts, is_pair_cover,
    is_pair_packing, greedy_cover, greedy_packing, dual_family,
    pair_cover_family, pair_packing_family,
)
from .splitting import split_member, split_to_size

__all__ = [
    "SetFamily",
    "is_prime",
    "latin_squares",
    "is_latin_square",
    "are_orthogonal",
    "mols_family",
    "STEINER_TRIPLE_SYSTEMS",
    "steiner_triple_system",
    "pair_counts",
    "is_pair_cover",
    "is_pair_packing",
    "greedy_cover",
    "greedy_packing",
    "dual_family",
    "pair_cover_family",
    "pair_packing_family",
    "split_member",
    "split_to_size",
    "intersection_graph",
    "max_multiplicity",
]
