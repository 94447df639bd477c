"""
Subcube core
Bit-packed subcubes of {0,1}^d, their algebra and the family file format
"""

from .config import CubeConfig
from .exceptions import (
    CubeError, ParseError, DimensionError, PreconditionError, DegenerateBaseError,
    DomainError, InvalidWitnessError, UnsupportedOrderError, TooManySquaresError,
    InfeasibleError, SizeLimitError, ResourceLimitError, CheckpointMismatchError,
    SearchInterrupted,
)
from .subcube import (
    Point, Subcube, CubeFamily, parse_subcube, intersects,
    intersection, contains, hamming_distance, project, enumerate_points,
    iter_point_bits, extend, apply_symmetry, all_subcubes, submasks,
    conflict_mask,
    hyperoctahedral_group,
)
from .familyio import parse_family_text, format_family, read_family, write_family

__all__ = [
    "CubeConfig",
    "CubeError", "ParseError", "DimensionError", "PreconditionError",
    "DegenerateBaseError", "DomainError", "InvalidWitnessError",
    "UnsupportedOrderError", "TooManySquaresError", "InfeasibleError",
    "SizeLimitError", "ResourceLimitError", "CheckpointMismatchError",
    "SearchInterrupted",
    "Point", "Subcube", "CubeFamily", "parse_subcube",
    "intersects", "intersection", "contains", "hamming_distance", "project",
    "enumerate_points", "iter_point_bits", "extend", "apply_symmetry",
    "all_subcubes", "hyperoctahedral_group", "submasks", "conflict_mask",
    "parse_family_text", "format_family", "read_family", "write_family",
]
