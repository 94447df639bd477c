"""
Bitset clique algorithms

Vertex sets are Python integers used as bitsets; adjacency[v] is the
neighbourhood of v. The maximum clique search is branch and bound with a
greedy colouring bound.
"""

from typing import List, Sequence


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _colour_order(adjacency: Sequence[int], candidates: int):
    """Greedy colouring of the candidate set, vertices listed by colour"""
    order = []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~adjacency[v] & ~low
            uncoloured &= ~low
            order.append((v, colour))
    return order


def max_clique(adjacency: Sequence[int], candidates: int = None) -> List[int]:
    """
    A maximum clique of the graph (vertex list, ascending)

    Deterministic: among equal-size cliques the first one found by the fixed
    branching order is kept.
    """
    n = len(adjacency)
    if candidates is None:
        candidates = (1 << n) - 1
    if not candidates:
        return []

    best: List[int] = []
    current: List[int] = []

    def expand(pool: int) -> None:
        nonlocal best
        order = _colour_order(adjacency, pool)
        for v, colour in reversed(order):
            if len(current) + colour <= len(best):
                return
            current.append(v)
            sub = pool & adjacency[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            pool &= ~(1 << v)

    expand(candidates)
    return sorted(best)


def has_clique(adjacency: Sequence[int], candidates: int, size: int) -> bool:
    """True iff the candidate set contains a clique of the given size"""
    if size <= 0:
        return True
    if candidates.bit_count() < size:
        return False
    if size == 1:
        return True
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        if has_clique(adjacency, candidates & adjacency[v], size - 1):
            return True
        if candidates.bit_count() < size:
            return False
    return False


def count_cliques(adjacency: Sequence[int], size: int, candidates: int = None) -> int:
    """Number of vertex subsets of the given size that are pairwise adjacent"""
    if candidates is None:
        candidates = (1 << len(adjacency)) - 1

    def count(pool: int, needed: int) -> int:
        if needed == 0:
            return 1
        if pool.bit_count() < needed:
            return 0
        if needed == 1:
            return pool.bit_count()
        total = 0
        while pool:
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            total += count(pool & adjacency[v], needed - 1)
        return total

    return count(candidates, size)
