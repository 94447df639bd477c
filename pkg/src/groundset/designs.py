"""
Pair covers, pair packings and their dual families

Blocks S_1..S_m are r-subsets of [n]. The dual family has members
A_i = {a : i in S_a} over the ground set [m]; every ground element lies in
exactly r members and |A_i n A_j| counts the blocks holding the pair {i, j}.
"""

import itertools
import logging
from typing import Dict, List, Sequence, Tuple

from ..cubes.exceptions import InfeasibleError, PreconditionError
from .models import SetFamily

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


def _projective_triples(rank: int) -> List[Block]:
    """Lines {a, b, a^b} of PG(rank-1, 2) on points 1..2^rank - 1"""
    top = 1 << rank
    return sorted({tuple(sorted((a, b, a ^ b))) for a in range(1, top) for b in range(a + 1, top)})


def _affine_triples() -> List[Block]:
    """Lines of AG(2, 3); point (x, y) is 3x + y + 1"""
    lines = set()
    for slope in range(3):
        for offset in range(3):
            lines.add(tuple(sorted(3 * x + (slope * x + offset) % 3 + 1 for x in range(3))))
    for x in range(3):
        lines.add(tuple(3 * x + y + 1 for y in range(3)))
    return sorted(lines)


def _cyclic_triples(n: int, bases: Sequence[Block]) -> List[Block]:
    return sorted({tuple(sorted((b + s) % n + 1 for b in base)) for base in bases for s in range(n)})


def pair_counts(blocks: Sequence[Block], n: int) -> Dict[Tuple[int, int], int]:
    """Number of blocks holding each pair of [n]"""
    counts = {pair: 0 for pair in itertools.combinations(range(1, n + 1), 2)}
    for block in blocks:
        for pair in itertools.combinations(sorted(block), 2):
            counts[pair] += 1
    return counts


def is_pair_cover(blocks: Sequence[Block], n: int) -> bool:
    return all(c >= 1 for c in pair_counts(blocks, n).values())


def is_pair_packing(blocks: Sequence[Block], n: int) -> bool:
    return all(c <= 1 for c in pair_counts(blocks, n).values())


def _load_catalog() -> Dict[int, List[Block]]:
    catalog = {
        7: _projective_triples(3),
        9: _affine_triples(),
        13: _cyclic_triples(13, [(0, 1, 4), (0, 2, 7)]),
        15: _projective_triples(4),
    }
    for n, blocks in catalog.items():
        counts = pair_counts(blocks, n)
        if any(c != 1 for c in counts.values()):
            logger.error(f"Steiner triple system of order {n} failed verification")
            raise RuntimeError(f"Catalog STS({n}) is not a Steiner triple system")
    logger.debug(f"Verified Steiner triple systems of orders {sorted(catalog)}")
    return catalog


STEINER_TRIPLE_SYSTEMS: Dict[int, List[Block]] = _load_catalog()


def steiner_triple_system(n: int) -> List[Block]:
    """Catalog STS(n) for n in 3, 7, 9, 13, 15"""
    if n == 3:
        return [(1, 2, 3)]
    if n not in STEINER_TRIPLE_SYSTEMS:
        raise PreconditionError(f"No Steiner triple system of order {n} in the catalog")
    return list(STEINER_TRIPLE_SYSTEMS[n])


def _exact_design(n: int, r: int):
    if n == r:
        return [tuple(range(1, n + 1))]
    if r == 3 and (n in STEINER_TRIPLE_SYSTEMS):
        return steiner_triple_system(n)
    return None


def greedy_cover(n: int, r: int) -> List[Block]:
    """
    Repeatedly take the r-subset covering the most uncovered pairs

    Candidates are scanned in lexicographic order, so the first maximum wins.
    """
    uncovered = set(itertools.combinations(range(1, n + 1), 2))
    candidates = list(itertools.combinations(range(1, n + 1), r))
    blocks: List[Block] = []
    while uncovered:
        best, gain = None, 0
        for block in candidates:
            g = sum(1 for pair in itertools.combinations(block, 2) if pair in uncovered)
            if g > gain:
                best, gain = block, g
        blocks.append(best)
        uncovered.difference_update(itertools.combinations(best, 2))
    return blocks


def greedy_packing(n: int, r: int) -> List[Block]:
    """First-fit over r-subsets in lexicographic order, no pair used twice"""
    used = set()
    blocks: List[Block] = []
    for block in itertools.combinations(range(1, n + 1), r):
        pairs = list(itertools.combinations(block, 2))
        if any(p in used for p in pairs):
            continue
        blocks.append(block)
        used.update(pairs)
    return blocks


def dual_family(blocks: Sequence[Block], n: int) -> SetFamily:
    """A_i = {a : i in S_a} over ground [m]"""
    members: List[List[int]] = [[] for _ in range(n)]
    for a, block in enumerate(blocks, start=1):
        for i in block:
            members[i - 1].append(a)
    missing = [i + 1 for i, m in enumerate(members) if not m]
    if missing:
        raise InfeasibleError(f"Elements {missing} lie in no block; their dual members would be empty")
    return SetFamily(ground_size=len(blocks), members=members, blocks=[list(b) for b in blocks])


def _check_orders(n: int, r: int) -> None:
    if r < 2:
        raise PreconditionError("Block size r must be at least 2")
    if n < r:
        raise InfeasibleError(f"Cannot place {r}-subsets in [{n}]")


def pair_cover_family(n: int, r: int) -> SetFamily:
    """Dual of a pair cover by r-subsets; the intersection graph is K_n"""
    _check_orders(n, r)
    blocks = _exact_design(n, r)
    if blocks is None:
        blocks = greedy_cover(n, r)
    logger.debug(f"pair_cover_family n={n} r={r}: {len(blocks)} blocks")
    return dual_family(blocks, n)


def pair_packing_family(n: int, r: int) -> SetFamily:
    """
    Dual of a pair packing by r-subsets; binom(r,2) edges per block

    Every element must lie in some block or its dual member is empty. A block
    through an element outside the first block {1..r} meets {1..r} in at most
    one element, so it needs r-2 of the n-r-1 remaining elements: orders with
    r < n < 2r-1 (n = r+1 included, e.g. (4,3), (5,4), (6,5)) have no such
    packing and raise InfeasibleError. Larger orders raise the same error if
    first-fit leaves an element uncovered.
    """
    _check_orders(n, r)
    if r < n < 2 * r - 1:
        raise InfeasibleError(
            f"No pair packing by {r}-subsets covers every element of [{n}]; "
            f"packings need n = {r} or n >= {2 * r - 1}"
        )
    blocks = _exact_design(n, r)
    if blocks is None:
        blocks = greedy_packing(n, r)
    logger.debug(f"pair_packing_family n={n} r={r}: {len(blocks)} blocks")
    return dual_family(blocks, n)
