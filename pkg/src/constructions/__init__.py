"""
Extremal constructions
Turan-type subcube families and the exact partite-profile optimizer
"""

from .config import ConstructionConfig
from .models import PartiteProfile, OptimizerResult, BoundCheck
from .families import (
    turan_number, absolute_bound, feasibility_limit, waterfill, partite_family,
    full_codim_family, large_n_family, mixed_partite_family, clique_density_family,
    augment_with_full_cube, turan_bound_check,
)
from .optimizer import optimize_partite_profile, optimal_partite_profile, realize_profile

__all__ = [
    "ConstructionConfig",
    "PartiteProfile",
    "OptimizerResult",
    "BoundCheck",
    "turan_number",
    "absolute_bound",
    "feasibility_limit",
    "waterfill",
    "partite_family",
    "full_codim_family",
    "large_n_family",
    "mixed_partite_family",
    "clique_density_family",
    "augment_with_full_cube",
    "turan_bound_check",
    "optimize_partite_profile",
    "optimal_partite_profile",
    "realize_profile",
]
