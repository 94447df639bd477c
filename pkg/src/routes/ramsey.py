"""
API routes for Ramsey values and bounds
"""

import logging
from typing import Optional

from fastapi import APIRouter, Query

from ..cubes.exceptions import CubeError, ParseError
from ..graphs.graph import IntersectionGraph
from ..ramsey import RamseyResult
from ..services import (
    BlowupDocument,
    BlowupRequest,
    BoundsDocument,
    RamseyRequest,
    blowup_lower_bound,
    exact_ramsey,
    ramsey_bounds,
)
from .errors import http_error

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/ramsey", tags=["ramsey"])


@router.post("/exact", response_model=RamseyResult)
def exact(request: RamseyRequest):
    """
    R_d(k, l) by exhaustive search

    Results are cached; long searches are better run from the command
    line, which checkpoints.
    """
    try:
        return exact_ramsey(request.d, request.k, request.l)
    except CubeError as e:
        raise http_error(e)


@router.get("/bounds", response_model=BoundsDocument)
def bounds(
    d: int = Query(..., ge=1),
    k: int = Query(...),
    l: int = Query(...),
    alpha: Optional[str] = Query(None, description="Positive rational overriding alpha in the l=3 bound, e.g. 3/2"),
):
    try:
        return ramsey_bounds(d, k, l, alpha)
    except CubeError as e:
        raise http_error(e)


@router.post("/blowup", response_model=BlowupDocument)
def blowup(request: BlowupRequest):
    """Lower bound R_d(k, l) > d * floor(k/x) from a witness graph"""
    try:
        witness = None
        if request.edges is not None:
            witness = IntersectionGraph.from_edges(request.d, [tuple(e) for e in request.edges])
        return blowup_lower_bound(request.d, request.k, request.l, request.x, witness)
    except CubeError as e:
        raise http_error(e)
    except (ValueError, IndexError) as e:
        logger.warning(f"Malformed witness edges: {e}")
        raise http_error(ParseError(f"Malformed witness edges: {e}"))
