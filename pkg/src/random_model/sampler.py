"""
Random subcube families

Member i is drawn from the Philox stream keyed by (seed, i // BLOCK_SIZE),
so a family depends only on its parameters and seed, never on how blocks
are distributed over workers. Philox is numpy's 4x64 counter-based
generator with 10 rounds.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from ..cubes.exceptions import DomainError
from ..cubes.subcube import CubeFamily, Subcube
from ..graphs.graph import build_graph
from .config import RandomModelConfig
from .models import EdgeEstimate, RandomModelParams

logger = logging.getLogger(__name__)

Bits = Tuple[np.ndarray, np.ndarray]


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(block << 64) | seed))


def _blocks(n: int) -> List[Tuple[int, int, int]]:
    size = RandomModelConfig.BLOCK_SIZE
    return [(b, b * size, min(n, (b + 1) * size)) for b in range((n + size - 1) // size)]


def _iid_block(params: RandomModelParams, block: int, count: int) -> Bits:
    rng = block_generator(params.seed, block)
    u = rng.random((count, params.d))
    fixed = u < 2 * params.p
    values = u < params.p
    return fixed, values


def _codim_block(params: RandomModelParams, block: int, count: int) -> Bits:
    rng = block_generator(params.seed, block)
    d = params.d
    codims = rng.choice(d + 1, size=count, p=np.asarray(params.codim_distribution))
    # Rank of each coordinate in a random order; the c lowest ranks are fixed
    ranks = rng.random((count, d)).argsort(axis=1).argsort(axis=1)
    fixed = ranks < codims[:, None]
    values = rng.integers(0, 2, size=(count, d)).astype(bool) & fixed
    return fixed, values


def sample_bits(params: RandomModelParams, workers: Optional[int] = None) -> Bits:
    """Boolean (n, d) arrays of fixed coordinates and fixed values"""
    draw = _iid_block if params.codim_distribution is None else _codim_block
    blocks = _blocks(params.n)
    workers = workers or RandomModelConfig.SAMPLE_WORKERS
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: draw(params, b[0], b[2] - b[1]), blocks))
    else:
        parts = [draw(params, b, hi - lo) for b, lo, hi in blocks]
    if not parts:
        empty = np.zeros((0, params.d), dtype=bool)
        return empty, empty
    fixed = np.concatenate([f for f, _ in parts])
    values = np.concatenate([v for _, v in parts])
    return fixed, values


def _pack(bits: np.ndarray) -> List[int]:
    """Rows of a boolean matrix as integers, column i at bit i"""
    if bits.shape[1] <= 62:
        weights = np.left_shift(np.int64(1), np.arange(bits.shape[1], dtype=np.int64))
        return (bits.astype(np.int64) @ weights).tolist()
    return [sum(1 << int(i) for i in np.flatnonzero(row)) for row in bits]


def _to_family(params: RandomModelParams, fixed: np.ndarray, values: np.ndarray) -> CubeFamily:
    members = [Subcube(params.d, f, v) for f, v in zip(_pack(fixed), _pack(values))]
    return CubeFamily(params.d, members)


def sample_family(params: RandomModelParams, workers: Optional[int] = None) -> CubeFamily:
    """n i.i.d. subcubes, coordinates 0 / 1 / * with probabilities p / p / 1-2p"""
    if params.codim_distribution is not None:
        raise DomainError("Parameters carry a codimension distribution; use sample_family_codim")
    fixed, values = sample_bits(params, workers)
    logger.debug(f"Sampled {params.n} subcubes of Q_{params.d} with p={params.p} seed={params.seed}")
    return _to_family(params, fixed, values)


def sample_family_codim(params: RandomModelParams, workers: Optional[int] = None) -> CubeFamily:
    """Codimension from the distribution, then a uniform fixed set and uniform values"""
    if params.codim_distribution is None:
        raise DomainError("sample_family_codim needs a codimension distribution")
    fixed, values = sample_bits(params, workers)
    return _to_family(params, fixed, values)


def sample_dimension_family(n: int, d: int, dimension: int, seed: int) -> CubeFamily:
    """n random subcubes of Q_d that all have the given dimension"""
    if not 0 <= dimension <= d:
        raise DomainError(f"Dimension {dimension} outside 0..{d}")
    dist = [0.0] * (d + 1)
    dist[d - dimension] = 1.0
    return sample_family_codim(RandomModelParams.build(n=n, d=d, seed=seed, codim_distribution=dist))


def edge_probability(d: int, p: float) -> float:
    """(1 - 2p^2)^d: two coordinates conflict with probability 2p^2"""
    if not 0.0 <= p <= 0.5:
        raise DomainError(f"p must lie in [0, 1/2], got {p}")
    return (1.0 - 2.0 * p * p) ** d


def estimate_edge_probability(params: RandomModelParams, pairs: int) -> EdgeEstimate:
    """Intersection frequency over `pairs` independent pairs (members 2i, 2i+1)"""
    if pairs < 1:
        raise DomainError("Need at least one pair")
    fixed, values = sample_bits(params.model_copy(update={"n": 2 * pairs}))
    conflict = fixed[0::2] & fixed[1::2] & (values[0::2] ^ values[1::2])
    hits = int((~conflict.any(axis=1)).sum())
    frequency = hits / pairs
    se = math.sqrt(frequency * (1 - frequency) / pairs)

    if params.codim_distribution is None:
        expected = edge_probability(params.d, params.p)
    else:
        expected = float("nan")
    z = (frequency - expected) / se if se > 0 else 0.0
    return EdgeEstimate(
        d=params.d, p=params.p, pairs=pairs,
        frequency=frequency, standard_error=se, expected=expected, z_score=z,
    )


def edge_density(family: CubeFamily) -> float:
    n = len(family)
    if n < 2:
        return 0.0
    return build_graph(family).edge_count() / (n * (n - 1) / 2)


def codimension_histogram(family: CubeFamily) -> List[int]:
    """Number of members of each codimension 0..d"""
    counts = [0] * (family.width + 1)
    for cube in family:
        counts[cube.codimension] += 1
    return counts
