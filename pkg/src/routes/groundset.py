"""
API route for the ground-set families (Latin squares, pair covers, pair packings)
"""

from fastapi import APIRouter, HTTPException

from ..cubes.exceptions import CubeError
from ..groundset import split_to_size
from ..services import (
    SET_KINDS,
    ConstructionDocument,
    ConstructionParams,
    GroundsetRequest,
    construct,
    construction_document,
)
from .errors import http_error

router = APIRouter(prefix="/groundset", tags=["groundset"])


@router.post("/{kind}", response_model=ConstructionDocument)
def build_groundset_family(kind: str, request: GroundsetRequest):
    """Build a ground-set family, optionally split up to `split_to` members"""
    if kind not in SET_KINDS:
        raise HTTPException(status_code=404, detail=f"Unknown ground-set family '{kind}'")
    try:
        params = ConstructionParams(n=request.n, r=request.r, q=request.q)
        family = construct(kind, params)
        if request.split_to is not None:
            family = split_to_size(family, request.split_to)
        return construction_document(kind, params, family)
    except CubeError as e:
        raise http_error(e)
