"""
Exact computation of R_d(k, l)

A family avoids K_k iff every point lies in at most k-1 members (Helly),
and its independence number only depends on its support. If a support has
no l pairwise disjoint members, neither has its up-closure, and moving a
copy of a member to a smaller member of the support never raises a point
load. So the largest family is found by

  1. enumerating the maximal up-closed supports without l pairwise disjoint
     members, one per symmetry class (orderly generation: candidates are
     added in index order and every prefix must be lexicographically least
     in its orbit), and
  2. for each, allocating multiplicities to its minimal members so that no
     point load exceeds k-1, by branch and bound.

The generation tree is cut at a fixed support size into branches that are
explored independently and merged in branch order.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from ..cubes.exceptions import (
    DimensionError,
    DomainError,
    InvalidWitnessError,
    ResourceLimitError,
    SearchInterrupted,
)
from ..cubes.subcube import Subcube
from .bounds import absolute_ramsey_cap, verify_witness
from .checkpoint import config_hash, default_checkpoint_path, load_checkpoint, save_checkpoint
from .config import RamseyConfig
from .models import BranchOutcome, RamseyResult, SearchCheckpoint
from .space import Relabel, SearchSpace, get_space

logger = logging.getLogger(__name__)

Node = Tuple[Tuple[int, ...], int]


def allocate(space: SearchSpace, cubes: Sequence[int], cap: int) -> Tuple[int, List[int]]:
    """
    Largest multiset on the given candidates with every point load <= cap

    Returns the size and the candidate indices with repeats, ascending.
    """
    order = sorted(cubes, key=lambda c: (len(space.points[c]), c))
    pts = [space.points[c] for c in order]
    residual = [cap] * (1 << space.d)
    suffix: List[frozenset] = [frozenset()] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | frozenset(pts[i])

    best = -1
    best_alloc: List[int] = []
    alloc = [0] * len(order)

    def dfs(i: int, total: int) -> None:
        nonlocal best, best_alloc
        if i == len(order):
            if total > best:
                best, best_alloc = total, alloc.copy()
            return
        # Each copy uses a unit at one of its points
        by_cube = sum(min(residual[x] for x in pts[j]) for j in range(i, len(order)))
        by_point = sum(residual[x] for x in suffix[i])
        if total + min(by_cube, by_point) <= best:
            return
        top = min(residual[x] for x in pts[i])
        for m in range(top, -1, -1):
            for x in pts[i]:
                residual[x] -= m
            alloc[i] = m
            dfs(i + 1, total + m)
            for x in pts[i]:
                residual[x] += m
        alloc[i] = 0

    dfs(0, 0)
    witness = sorted(c for c, m in zip(order, best_alloc) for _ in range(m))
    return best, witness


def children(space: SearchSpace, support: Tuple[int, ...], mask: int, l: int) -> Iterator[Node]:
    """Canonical one-candidate extensions of a canonical up-closed support"""
    start = support[-1] + 1 if support else 0
    for c in range(start, space.size):
        if space.can_add(mask, c, l):
            extended = support + (c,)
            if space.is_canonical(extended):
                yield extended, mask | (1 << c)


def build_frontier(space: SearchSpace, l: int, depth: int) -> Tuple[List[Tuple[int, ...]], int]:
    """Supports of size `depth`, plus smaller leaves, in generation order"""
    frontier: List[Tuple[int, ...]] = []
    nodes = 0

    def walk(support: Tuple[int, ...], mask: int) -> None:
        nonlocal nodes
        if len(support) >= depth:
            frontier.append(support)
            return
        kids = list(children(space, support, mask, l))
        if not kids:
            frontier.append(support)
            return
        nodes += 1
        for child in kids:
            walk(*child)

    walk((), 0)
    return frontier, nodes


def explore_branch(space: SearchSpace, root: Sequence[int], k: int, l: int) -> BranchOutcome:
    """Best allocation over the maximal supports below one frontier node"""
    best = 0
    witness: List[int] = []
    nodes = 0

    def visit(support: Tuple[int, ...], mask: int) -> None:
        nonlocal best, witness, nodes
        nodes += 1
        if space.is_maximal(mask, l):
            total, alloc = allocate(space, space.minimal_members(support, mask), k - 1)
            if total > best:
                best, witness = total, alloc
            return
        for child in children(space, support, mask, l):
            visit(*child)

    root = tuple(root)
    mask = 0
    for c in root:
        mask |= 1 << c
    visit(root, mask)
    return BranchOutcome(best=best, witness=witness, nodes=nodes)


def _explore_task(task: Tuple[int, int, int, Relabel, List[int]]) -> BranchOutcome:
    d, k, l, relabel, root = task
    return explore_branch(get_space(d, relabel), root, k, l)


class RamseySearch:
    """Exact R_d(k, l) search with work splitting and checkpoints"""

    def __init__(
        self,
        d: int,
        k: int,
        l: int,
        workers: Optional[int] = None,
        split_depth: Optional[int] = None,
        relabel: Relabel = None,
    ):
        if d < 1:
            raise DimensionError("d must be at least 1")
        if k < 2 or l < 2:
            raise DomainError(f"Ramsey orders must be at least 2, got k={k}, l={l}")
        self.d, self.k, self.l = d, k, l
        self.workers = workers if workers is not None else RamseyConfig.WORKERS
        self.split_depth = split_depth if split_depth is not None else RamseyConfig.SPLIT_DEPTH
        self.relabel = relabel
        self.config_hash = config_hash(d, k, l, self.split_depth, relabel)

    def closed_form(self) -> RamseyResult:
        """l > 2^d: no l pairwise disjoint subcubes exist at all"""
        d, k = self.d, self.k
        witness = [Subcube.point(x, d) for x in range(1 << d) for _ in range(k - 1)]
        return RamseyResult(
            d=d, k=k, l=self.l,
            value=absolute_ramsey_cap(d, k),
            witness=[str(c) for c in witness],
            method="closed-form",
            note="l > 2^d: every family of (k-1)*2^d + 1 subcubes has a point in k members",
        )

    def _start(self, checkpoint_path: Optional[Path], resume: bool) -> SearchCheckpoint:
        if resume and checkpoint_path is not None and checkpoint_path.exists():
            checkpoint = load_checkpoint(checkpoint_path, self.config_hash)
            logger.info(
                f"Resuming R_{self.d}({self.k},{self.l}) from {checkpoint_path}: "
                f"{len(checkpoint.completed)}/{len(checkpoint.frontier)} branches done"
            )
            return checkpoint
        if resume:
            logger.warning(f"No checkpoint at {checkpoint_path}, starting a fresh search")

        space = get_space(self.d, self.relabel)
        frontier, nodes = build_frontier(space, self.l, self.split_depth)
        logger.info(f"R_{self.d}({self.k},{self.l}): {len(frontier)} branches at depth {self.split_depth}")
        return SearchCheckpoint(
            format=RamseyConfig.CHECKPOINT_FORMAT,
            config_hash=self.config_hash,
            d=self.d, k=self.k, l=self.l,
            split_depth=self.split_depth,
            frontier=[list(s) for s in frontier],
            frontier_nodes=nodes,
        )

    def _outcomes(self, tasks: List[Tuple]) -> Iterator[BranchOutcome]:
        if self.workers > 1 and len(tasks) > 1:
            chunk = max(1, len(tasks) // (self.workers * 4))
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                yield from pool.map(_explore_task, tasks, chunksize=chunk)
        else:
            for task in tasks:
                yield _explore_task(task)

    def run(
        self,
        checkpoint_path: Optional[Union[str, Path]] = None,
        resume: bool = False,
        max_branches: Optional[int] = None,
    ) -> RamseyResult:
        """
        Run (or continue) the search

        Args:
            checkpoint_path: file for periodic and final checkpoints
            resume: continue from checkpoint_path when it exists
            max_branches: stop after this many new branches, raising SearchInterrupted

        Returns:
            RamseyResult with a verified witness of size value - 1
        """
        if self.l > 1 << self.d:
            return self.closed_form()
        if self.d > RamseyConfig.SEARCH_CAP:
            raise ResourceLimitError(
                f"Exact search is capped at d={RamseyConfig.SEARCH_CAP} (RAMSEY_SEARCH_CAP), got d={self.d}"
            )

        started = time.perf_counter()
        path = Path(checkpoint_path) if checkpoint_path is not None else None
        checkpoint = self._start(path, resume)

        pending = checkpoint.pending
        batch = pending if max_branches is None else pending[:max_branches]
        tasks = [(self.d, self.k, self.l, self.relabel, checkpoint.frontier[i]) for i in batch]

        for done, (index, outcome) in enumerate(zip(batch, self._outcomes(tasks)), start=1):
            checkpoint.completed[index] = outcome
            if done % RamseyConfig.CHECKPOINT_EVERY == 0:
                logger.info(f"{len(checkpoint.completed)}/{len(checkpoint.frontier)} branches explored")
                if path is not None:
                    save_checkpoint(checkpoint, path)

        if len(checkpoint.completed) < len(checkpoint.frontier):
            path = path or default_checkpoint_path(self.d, self.k, self.l)
            save_checkpoint(checkpoint, path)
            raise SearchInterrupted(
                f"Stopped after {len(batch)} branches; "
                f"{len(checkpoint.frontier) - len(checkpoint.completed)} remain",
                checkpoint_path=str(path),
            )
        if path is not None:
            save_checkpoint(checkpoint, path)

        return self._merge(checkpoint, time.perf_counter() - started)

    def _merge(self, checkpoint: SearchCheckpoint, elapsed: float) -> RamseyResult:
        best = BranchOutcome(best=0)
        for index in range(len(checkpoint.frontier)):
            outcome = checkpoint.completed[index]
            if outcome.best > best.best:
                best = outcome

        space = get_space(self.d, self.relabel)
        family = space.family(best.witness)
        if not verify_witness(family, self.k, self.l):
            logger.error(f"Search witness for R_{self.d}({self.k},{self.l}) failed verification")
            raise InvalidWitnessError("Search produced an invalid witness")

        logger.info(
            f"R_{self.d}({self.k},{self.l}) = {best.best + 1} "
            f"({checkpoint.nodes_explored} nodes, {elapsed:.2f}s)"
        )
        return RamseyResult(
            d=self.d, k=self.k, l=self.l,
            value=best.best + 1,
            witness=family.texts(),
            nodes_explored=checkpoint.nodes_explored,
            elapsed_seconds=elapsed,
            branches=len(checkpoint.frontier),
        )


def ramsey_exact(
    d: int,
    k: int,
    l: int,
    workers: Optional[int] = None,
    checkpoint_path: Optional[Union[str, Path]] = None,
    resume: bool = False,
    max_branches: Optional[int] = None,
    relabel: Relabel = None,
    split_depth: Optional[int] = None,
) -> RamseyResult:
    """Least n such that every n subcubes of Q_d hold a K_k or l disjoint members"""
    search = RamseySearch(d, k, l, workers=workers, split_depth=split_depth, relabel=relabel)
    return search.run(checkpoint_path=checkpoint_path, resume=resume, max_branches=max_branches)


def ramsey_bruteforce(d: int, k: int, l: int) -> RamseyResult:
    """
    Plain exhaustive search over multisets, no symmetry reduction

    Candidates are taken in index order with multiplicity k-1 down to 0.
    Only usable for very small d.
    """
    if d < 1:
        raise DimensionError("d must be at least 1")
    if k < 2 or l < 2:
        raise DomainError(f"Ramsey orders must be at least 2, got k={k}, l={l}")
    started = time.perf_counter()
    space = get_space(d)
    residual = [k - 1] * (1 << d)
    counts = [0] * space.size
    best = 0
    best_counts: List[int] = list(counts)
    nodes = 0

    def dfs(c: int, total: int, mask: int) -> None:
        nonlocal best, best_counts, nodes
        nodes += 1
        if c == space.size:
            if total > best:
                best, best_counts = total, counts.copy()
            return
        if total + sum(residual) <= best:
            return
        pts = space.points[c]
        top = min(residual[x] for x in pts)
        if top and not space.creates_independent(mask, c, l):
            for m in range(top, 0, -1):
                for x in pts:
                    residual[x] -= m
                counts[c] = m
                dfs(c + 1, total + m, mask | (1 << c))
                for x in pts:
                    residual[x] += m
            counts[c] = 0
        dfs(c + 1, total, mask)

    dfs(0, 0, 0)
    family = space.family([c for c, m in enumerate(best_counts) for _ in range(m)])
    return RamseyResult(
        d=d, k=k, l=l,
        value=best + 1,
        witness=family.texts(),
        nodes_explored=nodes,
        elapsed_seconds=time.perf_counter() - started,
        method="bruteforce",
    )
