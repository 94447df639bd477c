"""
Graph-to-subcube representation and the growth lemma
"""

import logging
from typing import List

from ..cubes.exceptions import InfeasibleError, PreconditionError
from ..cubes.subcube import CubeFamily, Subcube
from .graph import IntersectionGraph, build_graph, clique_number

logger = logging.getLogger(__name__)


def represent_graph(graph: IntersectionGraph) -> CubeFamily:
    """
    Express a graph on d vertices as an intersection family in Q_d

    Member i fixes coordinate i to 1, fixes coordinate j to 0 for every
    non-neighbour j != i and leaves neighbours free. Non-adjacent i, j
    conflict on coordinate i; adjacent ones have no 1 in a common fixed
    position.
    """
    d = graph.n
    if d < 1:
        raise PreconditionError("Representation needs at least one vertex")

    full = (1 << d) - 1
    members: List[Subcube] = []
    for i in range(d):
        own = 1 << i
        fixed = full & ~graph.adjacency[i]
        members.append(Subcube(d, fixed, own))
    return CubeFamily(d, members)


def grow_family(family: CubeFamily, target_n: int, r: int) -> CubeFamily:
    """
    Grow a K_{r+1}-free family to `target_n` members without losing edges

    Each step splits the lowest-index non-singleton member on its lowest
    free coordinate (the 0-half stays in place, the 1-half follows it), or,
    when every member is a singleton, appends a copy of the lowest-index
    singleton used fewer than r times. If all present singletons are used r
    times the lowest uncovered point is added.
    """
    d = family.width
    if r < 1:
        raise PreconditionError("r must be at least 1")
    if target_n > r * (1 << d):
        raise InfeasibleError(
            f"No K_{r + 1}-free family of {target_n} subcubes in Q_{d}: "
            f"some point would lie in more than {r} members (limit {r * (1 << d)})"
        )
    if target_n < len(family):
        raise PreconditionError(f"Family already has {len(family)} > {target_n} members")

    omega, _ = clique_number(build_graph(family))
    if omega > r:
        raise PreconditionError(f"Family contains K_{omega}, expected K_{r + 1}-free")

    members = list(family.members)
    while len(members) < target_n:
        split_at = next((i for i, c in enumerate(members) if c.dimension > 0), None)
        if split_at is not None:
            cube = members[split_at]
            low = cube.free & -cube.free
            members[split_at] = Subcube(d, cube.fixed | low, cube.values)
            members.insert(split_at + 1, Subcube(d, cube.fixed | low, cube.values | low))
            continue

        counts: dict = {}
        for cube in members:
            counts[cube.values] = counts.get(cube.values, 0) + 1
        spare = next((c for c in members if counts[c.values] < r), None)
        if spare is None:
            bits = next(x for x in range(1 << d) if x not in counts)
            spare = Subcube.point(bits, d)
        members.append(spare)

    logger.debug(f"Grew family from {len(family)} to {len(members)} members (r={r})")
    return CubeFamily(d, members)
