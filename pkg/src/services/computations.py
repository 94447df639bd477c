"""
Adapters over the library computations

The deterministic ones are cached in Redis when it is available.
"""

import logging
import secrets
from typing import List, Optional

from ..cache.decorators import cache_result
from ..constructions import OptimizerResult, optimize_partite_profile
from ..cubes.exceptions import InfeasibleError
from ..cubes.subcube import CubeFamily
from ..graphs.export import analysis_report
from ..graphs.graph import IntersectionGraph, build_graph
from ..graphs.models import AnalysisReport
from ..ramsey import (
    WITNESS_CATALOG,
    RamseyResult,
    absolute_ramsey_cap,
    classical_ramsey,
    inductive_upper_bound,
    lower_bound_blowup,
    parse_alpha,
    ramsey_exact,
    search_abstract_witness,
    trivial_lower_bound,
    upper_bound_eval,
)
from ..random_model import (
    RandomModelParams,
    codimension_histogram,
    edge_density,
    sample_family,
    sample_family_codim,
)
from .models import BlowupDocument, BoundsDocument, SampleDocument

logger = logging.getLogger(__name__)

SEED_BITS = 64


@cache_result("analysis", model=AnalysisReport)
def analyze_members(d: int, members: List[str], clique_sizes: Optional[List[int]] = None) -> AnalysisReport:
    """Analysis report of a family given as subcube texts"""
    return analysis_report(CubeFamily.parse(members, width=d), clique_sizes)


@cache_result("optimizer", model=OptimizerResult)
def optimize_profile(n: int, d: int, r: int) -> OptimizerResult:
    return optimize_partite_profile(n, d, r)


@cache_result("ramsey", model=RamseyResult)
def exact_ramsey(d: int, k: int, l: int) -> RamseyResult:
    """R_d(k, l) without checkpoints; the worker count comes from RAMSEY_WORKERS"""
    logger.info(f"Computing R_{d}({k},{l})")
    return ramsey_exact(d, k, l)


def ramsey_bounds(d: int, k: int, l: int, alpha: Optional[str] = None) -> BoundsDocument:
    """Closed-form bounds; alpha is a positive rational such as "3/2" for the l=3 bound"""
    rational = parse_alpha(alpha) if alpha is not None else None
    upper = upper_bound_eval(d, k, l, rational)
    return BoundsDocument(
        d=d, k=k, l=l,
        alpha=str(rational) if rational is not None else None,
        trivial_lower_bound=trivial_lower_bound(k, l),
        absolute_cap=absolute_ramsey_cap(d, k),
        upper_bound=str(upper),
        upper_bound_value=float(upper),
        inductive_bound=str(inductive_upper_bound(d, k, l)),
        classical=classical_ramsey(k, l),
    )


def blowup_witness(d: int, x: int, l: int) -> IntersectionGraph:
    """Catalog witness when it has d vertices, otherwise the first one found by search"""
    graph = WITNESS_CATALOG.get((x, l))
    if graph is not None and graph.n == d:
        return graph
    graph = search_abstract_witness(d, x, l)
    if graph is None:
        raise InfeasibleError(f"No graph on {d} vertices avoids K_{x} and an independent {l}-set")
    return graph


def blowup_lower_bound(d: int, k: int, l: int, x: int, witness: Optional[IntersectionGraph] = None) -> BlowupDocument:
    graph = witness if witness is not None else blowup_witness(d, x, l)
    value, family = lower_bound_blowup(d, k, l, graph, x)
    return BlowupDocument(
        d=d, k=k, l=l, x=x,
        value=value,
        witness_edges=[list(e) for e in graph.edges()],
        members=family.texts(),
    )


def generate_seed() -> int:
    return secrets.randbits(SEED_BITS)


def sample_random_family(params: RandomModelParams, workers: Optional[int] = None) -> CubeFamily:
    if params.codim_distribution is not None:
        return sample_family_codim(params, workers)
    return sample_family(params, workers)


def sample_document(params: RandomModelParams, family: CubeFamily) -> SampleDocument:
    return SampleDocument(
        parameters=params.model_dump(exclude_none=True),
        provenance=params.provenance(),
        d=family.width,
        n=len(family),
        edges=build_graph(family).edge_count(),
        edge_density=edge_density(family),
        codimension_histogram=codimension_histogram(family),
        members=family.texts(),
    )
