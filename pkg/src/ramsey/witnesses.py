"""
Abstract Ramsey witness graphs for the blow-up lower bound

A (x, l)-witness on d vertices has no K_x and no independent l-set, so
R(x, l) > d. Catalog entries are re-verified when the module loads.
"""

import logging
from typing import Dict, List, Optional, Tuple

from ..cubes.exceptions import InvalidWitnessError, PreconditionError
from ..graphs.clique import has_clique
from ..graphs.graph import IntersectionGraph
from .bounds import verify_graph_witness

logger = logging.getLogger(__name__)


def circulant(n: int, jumps: List[int]) -> IntersectionGraph:
    return IntersectionGraph.from_edges(n, {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps})


def _load_catalog() -> Dict[Tuple[int, int], IntersectionGraph]:
    catalog = {
        (3, 3): circulant(5, [1]),
        # Complement of the Wagner graph
        (4, 3): circulant(8, [2, 3]),
    }
    for (x, l), graph in catalog.items():
        if not verify_graph_witness(graph, x, l):
            logger.error(f"Catalog witness for ({x}, {l}) failed verification")
            raise InvalidWitnessError(f"Catalog witness for ({x}, {l}) is invalid")
    logger.debug(f"Verified {len(catalog)} catalog witness graphs")
    return catalog


WITNESS_CATALOG: Dict[Tuple[int, int], IntersectionGraph] = _load_catalog()


def catalog_witness(x: int, l: int) -> IntersectionGraph:
    if (x, l) not in WITNESS_CATALOG:
        raise PreconditionError(f"No catalog witness for (x={x}, l={l})")
    return WITNESS_CATALOG[(x, l)]


def search_abstract_witness(d: int, x: int, l: int) -> Optional[IntersectionGraph]:
    """
    First graph on d vertices with no K_x and no independent l-set

    Vertices are added one at a time; vertex v picks its neighbourhood among
    0..v-1 in increasing bitmask order. A choice is rejected when the
    neighbourhood holds a K_{x-1} or the non-neighbourhood an independent
    (l-1)-set. Returns None when no such graph exists.
    """
    if d < 1 or x < 2 or l < 2:
        raise PreconditionError("search_abstract_witness needs d >= 1 and x, l >= 2")

    adjacency: List[int] = [0] * d
    complement: List[int] = [0] * d

    def place(v: int) -> bool:
        if v == d:
            return True
        earlier = (1 << v) - 1
        for nbrs in range(1 << v):
            others = earlier & ~nbrs
            if has_clique(adjacency, nbrs, x - 1) or has_clique(complement, others, l - 1):
                continue
            adjacency[v], complement[v] = nbrs, others
            for u in range(v):
                bit = 1 << v
                if (nbrs >> u) & 1:
                    adjacency[u] |= bit
                else:
                    complement[u] |= bit
            if place(v + 1):
                return True
            for u in range(v):
                adjacency[u] &= ~(1 << v)
                complement[u] &= ~(1 << v)
            adjacency[v] = complement[v] = 0
        return False

    if not place(0):
        logger.info(f"No ({x}, {l})-witness on {d} vertices")
        return None
    graph = IntersectionGraph(adjacency)
    logger.info(f"Found ({x}, {l})-witness on {d} vertices with {graph.edge_count()} edges")
    return graph
