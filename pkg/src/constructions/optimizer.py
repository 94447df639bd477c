"""
Exact partite-profile optimizer

Minimizes sum binom(n_i, 2) over r-partite profiles with n_i <= 2^{d_i},
sum d_i <= d and sum n_i = n. Every nonincreasing dimension vector is
visited; sizes for a fixed vector come from water-filling, which is optimal
for a convex objective under box constraints.
"""

import logging
from math import comb
from typing import List, Optional, Tuple

from ..cubes.exceptions import InfeasibleError, PreconditionError, SizeLimitError
from ..cubes.subcube import CubeFamily, Subcube
from .config import ConstructionConfig
from .families import _consecutive_masks, class_members, feasibility_limit, waterfill
from .models import OptimizerResult, PartiteProfile

logger = logging.getLogger(__name__)


def optimize_partite_profile(n: int, d: int, r: int) -> OptimizerResult:
    """Exhaustive search with statistics; ties go to the lexicographically smallest d-vector"""
    if r < 1:
        raise PreconditionError("Profile optimizer needs r >= 1")
    if n < 0 or d < 0:
        raise PreconditionError("Profile optimizer needs n >= 0 and d >= 0")
    if n > feasibility_limit(d, r):
        raise InfeasibleError(f"n={n} exceeds r*2^d={feasibility_limit(d, r)}")
    if d > ConstructionConfig.OPTIMIZER_MAX_DIM or r > ConstructionConfig.OPTIMIZER_MAX_PARTS:
        raise SizeLimitError(
            f"Optimizer limited to d <= {ConstructionConfig.OPTIMIZER_MAX_DIM}, "
            f"r <= {ConstructionConfig.OPTIMIZER_MAX_PARTS}"
        )

    best: Optional[Tuple[int, List[int], List[int]]] = None
    enumerated = 0
    feasible = 0
    dims = [0] * r

    def visit(i: int, budget: int, ceiling: int) -> None:
        nonlocal best, enumerated, feasible
        if i == r:
            enumerated += 1
            caps = [1 << x for x in dims]
            if sum(caps) < n:
                return
            feasible += 1
            sizes = waterfill(n, caps)
            objective = sum(comb(s, 2) for s in sizes)
            # Visiting order is lexicographic, so only strict improvements replace
            if best is None or objective < best[0]:
                best = (objective, list(dims), sizes)
            return
        # The remaining parts can hold at most (r - i) * 2^top members
        for x in range(min(budget, ceiling) + 1):
            top = min(x, budget - x) if i + 1 < r else 0
            reachable = sum(1 << dims[j] for j in range(i)) + (1 << x) + (r - i - 1) * (1 << top)
            dims[i] = x
            if reachable < n:
                continue
            visit(i + 1, budget - x, x)
        dims[i] = 0

    visit(0, d, d)
    if best is None:
        raise InfeasibleError(f"No {r}-partite profile holds n={n} members in Q_{d}")

    objective, part_dims, part_sizes = best
    profile = PartiteProfile(r=r, part_dims=part_dims, part_sizes=part_sizes)
    logger.info(
        f"Optimal profile n={n} d={d} r={r}: dims={part_dims} sizes={part_sizes} "
        f"objective={objective} ({enumerated} compositions, {feasible} feasible)"
    )
    return OptimizerResult(
        n=n, d=d, r=r, profile=profile,
        edges=comb(n, 2) - objective,
        compositions_enumerated=enumerated,
        feasible_compositions=feasible,
    )


def optimal_partite_profile(n: int, d: int, r: int) -> PartiteProfile:
    """Globally optimal part dimensions and sizes for (n, d, r)"""
    return optimize_partite_profile(n, d, r).profile


def realize_profile(profile: PartiteProfile, d: int) -> CubeFamily:
    """
    Subcube family realizing a profile

    Part i fixes the next d_i low coordinates and keeps its first n_i
    subcubes; a part with d_i = 0 is the full cube.
    """
    if profile.d > d:
        raise PreconditionError(f"Profile uses {profile.d} coordinates, only {d} available")
    if d < 1:
        raise PreconditionError("Realization needs d >= 1")
    members: List[Subcube] = []
    for mask, size in zip(_consecutive_masks(profile.part_dims), profile.part_sizes):
        members.extend(class_members(d, mask, size))
    return CubeFamily(d, members)
