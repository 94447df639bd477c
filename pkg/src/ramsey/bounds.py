"""
Ramsey witnesses and closed-form bounds for R_d(k, l)
"""

import logging
import math
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from ..cubes.exceptions import DomainError, InvalidWitnessError, PreconditionError
from ..cubes.subcube import CubeFamily, Subcube
from ..graphs.clique import has_clique
from ..graphs.graph import IntersectionGraph, build_graph, clique_number, independence_number
from ..graphs.representation import represent_graph

logger = logging.getLogger(__name__)

# Base-2 logarithms are rounded to this denominator before exact arithmetic
LOG_DENOMINATOR = 10 ** 9

# Classical Ramsey numbers R(k, l) for the consistency checks
CLASSICAL_RAMSEY: Dict[Tuple[int, int], int] = {
    (3, 3): 6,
    (3, 4): 9,
    (3, 5): 14,
    (4, 4): 18,
}


def _check_orders(k: int, l: int) -> None:
    if k < 2 or l < 2:
        raise DomainError(f"Ramsey orders must be at least 2, got k={k}, l={l}")


def verify_witness(family: CubeFamily, k: int, l: int) -> bool:
    """True iff the family has no K_k and no l pairwise disjoint members"""
    _check_orders(k, l)
    graph = build_graph(family)
    omega, _ = clique_number(graph)
    return omega < k and independence_number(graph) < l


def verify_graph_witness(graph: IntersectionGraph, x: int, l: int) -> bool:
    """True iff an abstract graph has no K_x and no independent l-set"""
    full = (1 << graph.n) - 1
    return not has_clique(graph.adjacency, full, x) and not has_clique(graph.complement().adjacency, full, l)


def trivial_lower_bound(k: int, l: int) -> int:
    """(k-1)(l-1) + 1, from l-1 points taken k-1 times each"""
    _check_orders(k, l)
    return (k - 1) * (l - 1) + 1


def trivial_witness(d: int, k: int, l: int) -> CubeFamily:
    _check_orders(k, l)
    if l - 1 > 1 << d:
        raise PreconditionError(f"Q_{d} has fewer than {l - 1} points")
    return CubeFamily(d, [Subcube.point(x, d) for x in range(l - 1) for _ in range(k - 1)])


def classical_ramsey(k: int, l: int) -> Optional[int]:
    """R(k, l) from the small catalog, None when not listed"""
    if min(k, l) == 2:
        return max(k, l)
    return CLASSICAL_RAMSEY.get((min(k, l), max(k, l)))


def lower_bound_blowup(d: int, k: int, l: int, witness_graph: IntersectionGraph, x: int) -> Tuple[int, CubeFamily]:
    """
    Blow a Ramsey witness graph up into a subcube family

    Args:
        d: vertex count of the witness graph, also the cube dimension
        k, l: target orders
        witness_graph: graph with no K_x and no independent l-set
        x: clique bound of the witness

    Returns:
        (d * floor(k/x), family of floor(k/x) copies of each representing subcube)
    """
    _check_orders(k, l)
    if witness_graph.n != d:
        raise InvalidWitnessError(f"Witness graph has {witness_graph.n} vertices, expected {d}")
    if not verify_graph_witness(witness_graph, x, l):
        raise InvalidWitnessError(f"Witness graph contains K_{x} or an independent {l}-set")

    copies = k // x
    if copies == 0:
        return 0, CubeFamily(d, [])
    family = represent_graph(witness_graph).repeated(copies)
    if not verify_witness(family, k, l):
        logger.error(f"Blow-up of a valid witness failed verification (d={d}, k={k}, l={l}, x={x})")
        raise InvalidWitnessError("Blow-up family failed verification")
    return d * copies, family


def _log2(value: Union[int, Fraction]) -> Fraction:
    return Fraction(math.log2(value)).limit_denominator(LOG_DENOMINATOR)


def _pow2(exponent: Fraction) -> Fraction:
    if exponent.denominator == 1:
        return Fraction(2) ** int(exponent)
    return Fraction(2 ** float(exponent)).limit_denominator(LOG_DENOMINATOR)


def parse_alpha(text: Union[str, int, Fraction]) -> Fraction:
    """A positive rational such as '2', '3/2' or '1.5'"""
    try:
        alpha = Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise DomainError(f"alpha must be a positive rational, got '{text}'")
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    return alpha


def triangle_free_bound(d: int, k: int, alpha: Optional[Union[str, int, Fraction]] = None) -> Fraction:
    """
    Upper bound on R_d(k, 3)

    Without alpha this is 2dk / (log d - log log d); with alpha it is
    (d/alpha + 2^alpha) k.
    """
    if d < 3:
        raise DomainError("The l=3 bound needs d >= 3")
    if alpha is None:
        gap = _log2(d) - _log2(_log2(d))
        return Fraction(2 * d * k) / gap
    alpha = parse_alpha(alpha)
    return (Fraction(d) / alpha + _pow2(alpha)) * k


def inductive_upper_bound(d: int, k: int, l: int) -> Fraction:
    """The induction-on-d sum bound 2k((d-1)^{l-1} - 1)/(d-2), or 2k(l-1) for d = 2"""
    _check_orders(k, l)
    if d < 1:
        raise DomainError("d must be at least 1")
    if d == 1:
        return Fraction(2 * k)
    if d == 2:
        return Fraction(2 * k * (l - 1))
    return Fraction(2 * k * ((d - 1) ** (l - 1) - 1), d - 2)


def upper_bound_eval(d: int, k: int, l: int, alpha: Optional[Union[str, int, Fraction]] = None) -> Fraction:
    """Best applicable closed-form upper bound on R_d(k, l)"""
    if d < 1:
        raise DomainError("d must be at least 1")
    _check_orders(k, l)
    if l == 3 and d >= 3:
        return triangle_free_bound(d, k, alpha)
    if d == 2:
        return Fraction(2 * k * (l - 1))
    return Fraction(2 * d ** (l - 2) * k)


def absolute_ramsey_cap(d: int, k: int) -> int:
    """(k-1) 2^d + 1: beyond this size some point lies in k members"""
    return (k - 1) * (1 << d) + 1