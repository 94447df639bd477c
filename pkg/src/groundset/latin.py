"""
Cyclic mutually orthogonal Latin squares

For a prime q the squares L_k(i, j) = k*i + j mod q, k = 1..q-1, are
pairwise orthogonal.
"""

import logging
from typing import List

import numpy as np

from ..cubes.exceptions import PreconditionError, TooManySquaresError, UnsupportedOrderError
from .models import SetFamily

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def latin_squares(q: int, count: int) -> List[np.ndarray]:
    """The first `count` cyclic squares of prime order q"""
    if not is_prime(q):
        raise UnsupportedOrderError(f"Order {q} is not prime; only cyclic prime-order squares are built")
    if count > q - 1:
        raise TooManySquaresError(f"At most {q - 1} orthogonal squares of order {q}, asked for {count}")
    rows, cols = np.indices((q, q))
    return [(k * rows + cols) % q for k in range(1, count + 1)]


def is_latin_square(square: np.ndarray) -> bool:
    """Every row and column is a permutation of 0..q-1"""
    q = square.shape[0]
    expected = np.arange(q)
    return all(
        np.array_equal(np.sort(square[i, :]), expected) and np.array_equal(np.sort(square[:, i]), expected)
        for i in range(q)
    )


def are_orthogonal(a: np.ndarray, b: np.ndarray) -> bool:
    """Superimposing a and b yields every ordered symbol pair exactly once"""
    if a.shape != b.shape:
        return False
    q = a.shape[0]
    pairs = set(zip(a.ravel().tolist(), b.ravel().tolist()))
    return len(pairs) == q * q


def mols_family(q: int, r: int) -> SetFamily:
    """
    K_{r+1}-free family over the q x q grid meeting t_r(rq) = binom(r,2) q^2

    The r classes are the rows, the columns and the symbol classes of r-2
    orthogonal squares. Cell (i, j) is ground element i*q + j + 1. Members
    of different classes meet in exactly one cell.
    """
    if r < 2:
        raise PreconditionError("mols_family needs r >= 2")
    if not is_prime(q):
        raise UnsupportedOrderError(f"Order {q} is not prime; only cyclic prime-order squares are built")
    if r > q + 1:
        raise TooManySquaresError(f"r={r} needs {r - 2} orthogonal squares of order {q}, at most {q - 1} exist")

    cells = np.arange(q * q).reshape(q, q) + 1
    members: List[List[int]] = []
    members.extend(cells[i, :].tolist() for i in range(q))
    members.extend(cells[:, j].tolist() for j in range(q))
    for square in latin_squares(q, r - 2):
        members.extend(cells[square == s].tolist() for s in range(q))

    logger.debug(f"mols_family q={q} r={r}: {len(members)} members over {q * q} cells")
    return SetFamily(ground_size=q * q, members=members)
