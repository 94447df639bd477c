"""
Turan-type subcube families

Each construction partitions the family into classes sharing a fixed set.
Members of one class are pairwise disjoint, so the intersection graph is
multipartite and its clique number is at most the class count.
"""

import logging
from math import comb
from typing import Iterable, List, Sequence, Union

from ..cubes.exceptions import InfeasibleError, PreconditionError
from ..cubes.subcube import CubeFamily, Subcube, submasks
from ..graphs.graph import IntersectionGraph, build_graph, clique_number
from ..graphs.representation import grow_family
from .models import BoundCheck

logger = logging.getLogger(__name__)

CoordinateSet = Union[int, Iterable[int]]


def turan_number(n: int, r: int) -> int:
    """t_r(n), the edge count of the balanced complete r-partite graph"""
    if n < 0 or r < 1:
        raise PreconditionError("turan_number needs n >= 0 and r >= 1")
    q, rem = divmod(n, r)
    return comb(n, 2) - rem * comb(q + 1, 2) - (r - rem) * comb(q, 2)


def absolute_bound(d: int, r: int) -> int:
    """binom(r, 2) * 2^d: each point is in at most binom(r, 2) intersecting pairs"""
    return comb(r, 2) << d


def feasibility_limit(d: int, r: int) -> int:
    """Largest n for which a K_{r+1}-free family in Q_d exists"""
    return r << d


def balanced_part_sizes(d: int, k: int) -> List[int]:
    """Split d into k part sizes differing by at most one, larger parts first"""
    q, rem = divmod(d, k)
    return [q + 1 if i < rem else q for i in range(k)]


def waterfill(n: int, caps: Sequence[int]) -> List[int]:
    """
    Sizes as equal as possible summing to n with size i at most caps[i]

    Leftover units after levelling go to the lowest-index classes that still
    have room.
    """
    if n > sum(caps):
        raise InfeasibleError(f"Cannot place {n} members into classes of capacity {sum(caps)}")
    lo, hi = 0, max(caps, default=0)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if sum(min(c, mid) for c in caps) <= n:
            lo = mid
        else:
            hi = mid - 1
    sizes = [min(c, lo) for c in caps]
    spare = n - sum(sizes)
    for i, c in enumerate(caps):
        if not spare:
            break
        if c > sizes[i]:
            sizes[i] += 1
            spare -= 1
    return sizes


def _coordinate_mask(coords: CoordinateSet, d: int) -> int:
    if isinstance(coords, int):
        mask = coords
    else:
        mask = 0
        for i in coords:
            if i < 0 or i >= d:
                raise PreconditionError(f"Coordinate {i} outside [0, {d})")
            mask |= 1 << i
    if mask >> d:
        raise PreconditionError(f"Coordinate mask {mask:#x} exceeds dimension {d}")
    return mask


def class_members(d: int, fixed: int, count: int = -1) -> List[Subcube]:
    """The first `count` subcubes with fixed set `fixed`, by ascending values"""
    values = sorted(submasks(fixed))
    if count >= 0:
        values = values[:count]
    return [Subcube(d, fixed, v) for v in values]


def _consecutive_masks(sizes: Sequence[int]) -> List[int]:
    """Disjoint masks taking the lowest coordinates in order"""
    masks = []
    start = 0
    for s in sizes:
        masks.append(((1 << s) - 1) << start)
        start += s
    return masks


def partite_family(n: int, d: int, k: int) -> CubeFamily:
    """
    Balanced complete k-partite family (the small-n construction)

    Class i consists of the subcubes with fixed set P_i, where P_1..P_k are
    disjoint blocks of t low coordinates and t is the least value with
    k * 2^t >= n. Beyond n <= k * 2^floor(d/k) the first d mod k blocks are
    enlarged by one coordinate. Classes are filled by water-filling, so the
    graph is T_k(n) whenever the blocks have equal size.
    """
    if k < 2:
        raise PreconditionError("partite_family needs k >= 2")
    if n < 0 or d < 1:
        raise PreconditionError("partite_family needs n >= 0 and d >= 1")

    base = d // k
    if n <= k << base:
        t = 0
        while k << t < n:
            t += 1
        sizes = [t] * k
    else:
        enlarged = balanced_part_sizes(d, k)
        if n > sum(1 << s for s in enlarged):
            raise InfeasibleError(
                f"partite_family: n={n} exceeds {sum(1 << s for s in enlarged)} for d={d}, k={k}"
            )
        # Enlarge the fewest leading blocks that fit n
        sizes = [base] * k
        for i in range(k):
            if sum(1 << s for s in sizes) >= n:
                break
            sizes[i] = enlarged[i]

    masks = _consecutive_masks(sizes)
    counts = waterfill(n, [1 << s for s in sizes])
    members: List[Subcube] = []
    for mask, count in zip(masks, counts):
        members.extend(class_members(d, mask, count))
    logger.debug(f"partite_family n={n} d={d} k={k} blocks={sizes} classes={counts}")
    return CubeFamily(d, members)


def mixed_partite_family(d: int, fixed_sets: Sequence[CoordinateSet]) -> CubeFamily:
    """
    One class per fixed set R_i holding every subcube with that fixed set

    Classes i and j contribute 2^|R_i u R_j| edges.
    """
    if not fixed_sets:
        raise PreconditionError("mixed_partite_family needs at least one class")
    members: List[Subcube] = []
    for coords in fixed_sets:
        members.extend(class_members(d, _coordinate_mask(coords, d)))
    return CubeFamily(d, members)


def full_codim_family(d: int, r: int, enlarge: bool = False) -> CubeFamily:
    """
    Family meeting the absolute bound binom(r,2) * 2^d

    Class i holds all subcubes with fixed set [d] minus P_i for disjoint
    blocks P_i of floor(d/r) coordinates. Each point lies in exactly one
    member per class. With `enlarge` the blocks partition [d].
    """
    if r < 1 or d < 1:
        raise PreconditionError("full_codim_family needs r >= 1 and d >= 1")
    sizes = balanced_part_sizes(d, r) if enlarge else [d // r] * r
    full = (1 << d) - 1
    return mixed_partite_family(d, [full & ~m for m in _consecutive_masks(sizes)])


def large_n_family(n: int, d: int, k: int) -> CubeFamily:
    """
    K_{k+1}-free family with binom(k,2) * 2^d edges (the large-n construction)

    The base takes the least t with k * 2^(d-t) <= n and uses classes with
    fixed sets [d] minus P_i, |P_i| = t, so it has at most n members. When
    kt exceeds d the blocks fall back to a balanced partition of [d], and n
    below that base size is infeasible. grow_family pads the base to n.
    """
    if k < 2:
        raise PreconditionError("large_n_family needs k >= 2")
    if d < 1:
        raise PreconditionError("large_n_family needs d >= 1")
    if n > k << d:
        raise InfeasibleError(f"large_n_family: n={n} exceeds k*2^d={k << d}")

    t = 0
    while k << (d - t) > n and t < d:
        t += 1
    sizes = [t] * k if t * k <= d else balanced_part_sizes(d, k)
    base_size = sum(1 << (d - s) for s in sizes)
    if n < base_size:
        raise InfeasibleError(
            f"large_n_family: n={n} is below the base size {base_size} for d={d}, k={k}"
        )

    full = (1 << d) - 1
    base = mixed_partite_family(d, [full & ~m for m in _consecutive_masks(sizes)])
    if n == len(base):
        return base
    return grow_family(base, n, k)


def clique_density_family(d: int, r: int, x: int) -> CubeFamily:
    """
    Complete r-partite family with exactly 2^d copies of K_r

    r-1 blocks have x coordinates and the last one d-(r-1)x; the classes
    hold every subcube fixed on their block.
    """
    if r < 2:
        raise PreconditionError("clique_density_family needs r >= 2")
    if r * x < d or (r - 1) * x > d:
        raise PreconditionError(f"clique_density_family needs d/r <= x <= d/(r-1), got x={x}")
    sizes = [x] * (r - 1) + [d - (r - 1) * x]
    return mixed_partite_family(d, _consecutive_masks(sizes))


def augment_with_full_cube(family: CubeFamily, r: int) -> CubeFamily:
    """
    Replace the lowest-degree member by the full cube

    Valid while the clique number stays below r, so the result is still
    K_{r+1}-free and has at least as many edges.
    """
    if not len(family):
        raise PreconditionError("Cannot augment an empty family")
    graph = build_graph(family)
    omega, _ = clique_number(graph)
    if omega >= r:
        raise PreconditionError(f"Family already contains K_{omega}; augmenting could create K_{r + 1}")
    victim = min(range(graph.n), key=lambda v: (graph.degree(v), v))
    members = list(family.members)
    members[victim] = Subcube.full(family.width)
    return family.with_members(members)


def turan_bound_check(graph: IntersectionGraph, r: int) -> BoundCheck:
    """Compare an edge count with t_r(n) and binom(r,2) * 2^d"""
    if graph.source is None:
        raise PreconditionError("Bound check needs a subcube source family")
    n, d = graph.n, graph.width
    edges = graph.edge_count()
    turan = turan_number(n, r)
    absolute = absolute_bound(d, r)
    return BoundCheck(
        n=n, d=d, r=r, edges=edges,
        turan_bound=turan, absolute_bound=absolute,
        holds=edges <= min(turan, absolute),
    )
