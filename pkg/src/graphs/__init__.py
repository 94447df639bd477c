"""
Graph core
Intersection graphs, cliques, independent sets, representation and growth
"""

from .config import GraphConfig
from .models import CliqueWitness, AnalysisReport
from .graph import (
    IntersectionGraph, build_graph, point_multiplicities, clique_number,
    clique_number_helly, clique_number_generic, independence_number,
    max_independent_set, count_cliques, has_clique, has_independent_set,
)
from .representation import represent_graph, grow_family
from .export import to_graph6, from_graph6, to_dimacs, from_dimacs, analysis_report

__all__ = [
    "GraphConfig",
    "CliqueWitness",
    "AnalysisReport",
    "IntersectionGraph",
    "build_graph",
    "point_multiplicities",
    "clique_number",
    "clique_number_helly",
    "clique_number_generic",
    "independence_number",
    "max_independent_set",
    "count_cliques",
    "has_clique",
    "has_independent_set",
    "represent_graph",
    "grow_family",
    "to_graph6",
    "from_graph6",
    "to_dimacs",
    "from_dimacs",
    "analysis_report",
]
