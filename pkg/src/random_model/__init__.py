"""
Random subcube intersection graphs
"""

from .config import RandomModelConfig
from .models import RandomModelParams, EdgeEstimate
from .sampler import (
    block_generator, sample_bits, sample_family, sample_family_codim,
    sample_dimension_family, edge_probability, estimate_edge_probability,
    edge_density, codimension_histogram,
)

__all__ = [
    "RandomModelConfig",
    "RandomModelParams",
    "EdgeEstimate",
    "block_generator",
    "sample_bits",
    "sample_family",
    "sample_family_codim",
    "sample_dimension_family",
    "edge_probability",
    "estimate_edge_probability",
    "edge_density",
    "codimension_histogram",
]
