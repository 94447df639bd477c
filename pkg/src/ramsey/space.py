"""
Candidate universe of the exact search

Candidates are the 3^d subcubes in dimension-descending order, so every
proper superset of a candidate has a smaller index. All relations are
precomputed as bitsets over candidate indices; the hyperoctahedral group is
stored as index permutations.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..cubes.subcube import (
    CubeFamily,
    Subcube,
    all_subcubes,
    apply_symmetry,
    contains,
    hyperoctahedral_group,
    intersects,
    iter_point_bits,
)
from ..graphs.clique import has_clique

logger = logging.getLogger(__name__)

Relabel = Optional[Tuple[Tuple[int, ...], int]]


class SearchSpace:
    """Subcubes of Q_d with disjointness, containment, point sets and symmetries"""

    def __init__(self, d: int, relabel: Relabel = None):
        self.d = d
        base = all_subcubes(d)
        if relabel is not None:
            perm, flips = relabel
            base = [apply_symmetry(c, perm, flips) for c in base]
        self.candidates: List[Subcube] = base
        self.size = len(base)
        self.index = {c: i for i, c in enumerate(base)}

        self.disjoint: List[int] = [0] * self.size
        self.supersets: List[int] = [0] * self.size
        self.subsets: List[int] = [0] * self.size
        for i, a in enumerate(base):
            for j, b in enumerate(base):
                if i == j:
                    continue
                if not intersects(a, b):
                    self.disjoint[i] |= 1 << j
                elif contains(b, a):
                    self.supersets[i] |= 1 << j
                    self.subsets[j] |= 1 << i

        self.points: List[Tuple[int, ...]] = [tuple(iter_point_bits(c)) for c in base]
        self.group: List[Tuple[int, ...]] = [
            tuple(self.index[apply_symmetry(c, perm, flips)] for c in base)
            for perm, flips in hyperoctahedral_group(d)
        ]
        logger.debug(f"Search space d={d}: {self.size} candidates, group order {len(self.group)}")

    def is_canonical(self, support: Sequence[int]) -> bool:
        """True iff the sorted index tuple is lexicographically least in its orbit"""
        current = tuple(support)
        for image in self.group:
            if tuple(sorted(image[i] for i in current)) < current:
                return False
        return True

    def creates_independent(self, mask: int, c: int, l: int) -> bool:
        """Adding c to the support would give l pairwise disjoint members"""
        return has_clique(self.disjoint, mask & self.disjoint[c], l - 1)

    def can_add(self, mask: int, c: int, l: int) -> bool:
        return not (mask >> c) & 1 and (self.supersets[c] & ~mask) == 0 and not self.creates_independent(mask, c, l)

    def is_maximal(self, mask: int, l: int) -> bool:
        """No candidate can join the up-closed support without an independent l-set"""
        return not any(self.can_add(mask, c, l) for c in range(self.size))

    def minimal_members(self, support: Sequence[int], mask: int) -> List[int]:
        return [c for c in support if not self.subsets[c] & mask]

    def family(self, indices: Sequence[int]) -> CubeFamily:
        return CubeFamily(self.d, [self.candidates[i] for i in indices])


@lru_cache(maxsize=8)
def get_space(d: int, relabel: Relabel = None) -> SearchSpace:
    return SearchSpace(d, relabel)
