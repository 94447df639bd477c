"""
Intersection graphs of subcube families

The adjacency of vertex i is a bitset (Python int) over the vertex indices.
Vertex i corresponds to member i of the source family; graphs built from
abstract edge lists or arbitrary sets carry no subcube source.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..cubes.exceptions import PreconditionError
from ..cubes.subcube import CubeFamily, Point, Subcube, intersection
from . import clique as bitset
from .config import GraphConfig
from .models import CliqueWitness

logger = logging.getLogger(__name__)


class IntersectionGraph:
    """Symmetric, irreflexive adjacency over a family"""

    __slots__ = ("n", "adjacency", "source")

    def __init__(self, adjacency: Sequence[int], source: Optional[CubeFamily] = None):
        self.n = len(adjacency)
        self.adjacency: Tuple[int, ...] = tuple(adjacency)
        self.source = source
        if source is not None and len(source) != self.n:
            raise ValueError("Source family size does not match the vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "IntersectionGraph":
        """An abstract graph on vertices 0..n-1"""
        adjacency = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"Loop at vertex {u}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(adjacency)

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable]) -> "IntersectionGraph":
        """Intersection graph of arbitrary finite sets"""
        frozen = [frozenset(s) for s in sets]
        adjacency = [0] * len(frozen)
        for i in range(len(frozen)):
            for j in range(i + 1, len(frozen)):
                if frozen[i] & frozen[j]:
                    adjacency[i] |= 1 << j
                    adjacency[j] |= 1 << i
        return cls(adjacency)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "IntersectionGraph":
        nodes = sorted(graph.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntersectionGraph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"IntersectionGraph(n={self.n}, edges={self.edge_count()})"

    @property
    def width(self) -> int:
        return self.source.width if self.source is not None else 0

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bitset.iter_bits(self.adjacency[u]) if u < v]

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adjacency) // 2

    def complement(self) -> "IntersectionGraph":
        full = (1 << self.n) - 1
        return IntersectionGraph([full & ~a & ~(1 << v) for v, a in enumerate(self.adjacency)])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph


def build_graph(family: CubeFamily) -> IntersectionGraph:
    """Intersection graph of a family by O(n^2) pairwise tests"""
    members = family.members
    n = len(members)
    fixed = [c.fixed for c in members]
    values = [c.values for c in members]
    adjacency = [0] * n
    for i in range(n):
        fi, vi = fixed[i], values[i]
        row = adjacency[i]
        for j in range(i + 1, n):
            # Disjoint iff some coordinate is fixed in both with different values
            if not (fi & fixed[j] & (vi ^ values[j])):
                row |= 1 << j
                adjacency[j] |= 1 << i
        adjacency[i] = row
    return IntersectionGraph(adjacency, family)


def point_multiplicities(family: CubeFamily) -> np.ndarray:
    """
    Number of members containing each point of {0,1}^d

    Entry x counts the members u with (x AND F(u)) = values(u). Members are
    grouped by fixed set so the sweep costs 2^d per distinct fixed set.
    """
    d = family.width
    size = 1 << d
    mult = np.zeros(size, dtype=np.int32)
    if not len(family):
        return mult

    by_fixed: dict = {}
    for cube in family:
        by_fixed.setdefault(cube.fixed, []).append(cube.values)

    points = np.arange(size, dtype=np.int32 if d < 31 else np.int64)
    for fixed, vals in by_fixed.items():
        counts = np.bincount(np.asarray(vals, dtype=np.int64), minlength=size)
        mult += counts[points & fixed].astype(np.int32)
    return mult


def _common_point(members: Sequence[Subcube]) -> Optional[Subcube]:
    common = members[0]
    for cube in members[1:]:
        common = intersection(common, cube)
        if common is None:
            return None
    return common


def clique_number_helly(graph: IntersectionGraph) -> Tuple[int, CliqueWitness]:
    """
    Clique number as the maximum point multiplicity

    By the Helly property pairwise intersecting subcubes share a point, so
    omega equals the largest number of members through a single point.
    """
    family = graph.source
    if family is None:
        raise PreconditionError("Point multiplicity needs a subcube source family")
    if graph.n == 0:
        return 0, CliqueWitness()

    mult = point_multiplicities(family)
    best = int(mult.argmax())
    omega = int(mult[best])
    point = Point(family.width, best)
    vertices = [i for i, cube in enumerate(family) if cube.contains_point(point)]
    return omega, CliqueWitness(vertices=vertices, point=str(point))


def clique_number_generic(graph: IntersectionGraph) -> Tuple[int, CliqueWitness]:
    """Clique number by branch and bound on the adjacency bitsets"""
    vertices = bitset.max_clique(graph.adjacency)
    point = None
    if vertices and graph.source is not None:
        common = _common_point([graph.source[i] for i in vertices])
        if common is not None:
            # Free coordinates of the common subcube set to 0
            point = str(Point(common.width, common.values))
    return len(vertices), CliqueWitness(vertices=vertices, point=point)


def clique_number(graph: IntersectionGraph) -> Tuple[int, CliqueWitness]:
    """Clique number with a witness, Helly sweep for small d"""
    if graph.source is not None and graph.source.width <= GraphConfig.HELLY_MAX_DIM:
        return clique_number_helly(graph)
    return clique_number_generic(graph)


def max_independent_set(graph: IntersectionGraph) -> List[int]:
    """A maximum pairwise-disjoint subfamily (maximum clique of the complement)"""
    return bitset.max_clique(graph.complement().adjacency)


def independence_number(graph: IntersectionGraph) -> int:
    return len(max_independent_set(graph))


def count_cliques(graph: IntersectionGraph, size: int) -> int:
    """Exact number of cliques with `size` vertices"""
    if size < 1:
        raise PreconditionError("Clique size must be at least 1")
    return bitset.count_cliques(graph.adjacency, size)


def has_clique(graph: IntersectionGraph, size: int) -> bool:
    return bitset.has_clique(graph.adjacency, (1 << graph.n) - 1, size)


def has_independent_set(graph: IntersectionGraph, size: int) -> bool:
    return bitset.has_clique(graph.complement().adjacency, (1 << graph.n) - 1, size)
