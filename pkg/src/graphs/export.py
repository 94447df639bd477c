"""
Graph export formats and analysis reports

graph6 goes through networkx; DIMACS uses the "p edge" / "e u v" edge
format with 1-based vertices.
"""

import logging
from typing import Iterable, List, Optional

import networkx as nx

from ..cubes.exceptions import ParseError
from ..cubes.subcube import CubeFamily
from .config import GraphConfig
from .graph import (
    IntersectionGraph,
    build_graph,
    clique_number,
    count_cliques,
    max_independent_set,
    point_multiplicities,
)
from .models import AnalysisReport

logger = logging.getLogger(__name__)


def to_graph6(graph: IntersectionGraph) -> str:
    """graph6 string without the >>graph6<< header"""
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(text: str) -> IntersectionGraph:
    return IntersectionGraph.from_networkx(nx.from_graph6_bytes(text.strip().encode("ascii")))


def to_dimacs(graph: IntersectionGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    edges = graph.edges()
    lines.append(f"p edge {graph.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def from_dimacs(lines: Iterable[str]) -> IntersectionGraph:
    """Read a DIMACS edge-format graph"""
    n: Optional[int] = None
    edges = []
    for raw in lines:
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) < 4 or tokens[1].lower() != "edge":
                raise ParseError(f"Unknown problem line: {line}")
            n = int(tokens[2])
        elif tokens[0] == "e":
            edges.append((int(tokens[1]) - 1, int(tokens[2]) - 1))
        else:
            raise ParseError(f"Unknown line format: {line}")
    if n is None:
        raise ParseError("Missing 'p edge' line")
    return IntersectionGraph.from_edges(n, edges)


def analysis_report(family: CubeFamily, clique_sizes: Optional[List[int]] = None) -> AnalysisReport:
    """n, d, edges, omega with its Helly witness, alpha and clique counts"""
    if clique_sizes is None:
        clique_sizes = GraphConfig.DEFAULT_CLIQUE_SIZES
    graph = build_graph(family)
    omega, witness = clique_number(graph)
    independent = max_independent_set(graph)

    max_mult = None
    if len(family) and family.width <= GraphConfig.HELLY_MAX_DIM:
        max_mult = int(point_multiplicities(family).max())

    report = AnalysisReport(
        n=graph.n,
        d=family.width,
        edges=graph.edge_count(),
        clique_number=omega,
        clique_witness=witness,
        independence_number=len(independent),
        independent_set=independent,
        clique_counts={size: count_cliques(graph, size) for size in clique_sizes},
        max_point_multiplicity=max_mult,
    )
    logger.debug(f"Analysis: n={report.n} edges={report.edges} omega={omega} alpha={len(independent)}")
    return report
