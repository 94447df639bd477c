"""
Ramsey numbers of subcube intersection graphs
Exact search for R_d(k, l), witness verification and closed-form bounds
"""

from .config import RamseyConfig
from .models import RamseyResult, BranchOutcome, SearchCheckpoint
from .space import SearchSpace, get_space
from .bounds import (
    CLASSICAL_RAMSEY, verify_witness, verify_graph_witness, trivial_lower_bound,
    trivial_witness, classical_ramsey, lower_bound_blowup, parse_alpha, triangle_free_bound,
    inductive_upper_bound, upper_bound_eval, absolute_ramsey_cap,
)
from .checkpoint import config_hash, default_checkpoint_path, save_checkpoint, load_checkpoint
from .search import RamseySearch, ramsey_exact, ramsey_bruteforce, allocate, build_frontier, explore_branch
from .witnesses import WITNESS_CATALOG, catalog_witness, circulant, search_abstract_witness

__all__ = [
    "RamseyConfig",
    "RamseyResult",
    "BranchOutcome",
    "SearchCheckpoint",
    "SearchSpace",
    "get_space",
    "CLASSICAL_RAMSEY",
    "verify_witness",
    "verify_graph_witness",
    "trivial_lower_bound",
    "trivial_witness",
    "classical_ramsey",
    "lower_bound_blowup",
    "parse_alpha",
    "triangle_free_bound",
    "inductive_upper_bound",
    "upper_bound_eval",
    "absolute_ramsey_cap",
    "config_hash",
    "default_checkpoint_path",
    "save_checkpoint",
    "load_checkpoint",
    "RamseySearch",
    "ramsey_exact",
    "ramsey_bruteforce",
    "allocate",
    "build_frontier",
    "explore_branch",
    "WITNESS_CATALOG",
    "catalog_witness",
    "circulant",
    "search_abstract_witness",
]
