"""
API routes for the extremal constructions and the partite optimizer
"""

import logging

from fastapi import APIRouter, HTTPException, Query

from ..constructions import OptimizerResult
from ..cubes.exceptions import CubeError
from ..services import (
    CONSTRUCTION_KINDS,
    ConstructionDocument,
    ConstructionParams,
    construction_result,
    optimize_profile,
)
from .errors import http_error

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/constructions", tags=["constructions"])


@router.get("")
def list_constructions():
    """Available construction kinds"""
    return {"kinds": list(CONSTRUCTION_KINDS)}


@router.get("/optimize", response_model=OptimizerResult)
def optimize(
    n: int = Query(..., ge=0),
    d: int = Query(..., ge=1),
    r: int = Query(..., ge=1),
):
    """Exact best r-partite profile for n subcubes of Q_d"""
    try:
        return optimize_profile(n, d, r)
    except CubeError as e:
        raise http_error(e)


@router.post("/{kind}", response_model=ConstructionDocument)
def build_construction(kind: str, params: ConstructionParams):
    """Build a named construction"""
    if kind not in CONSTRUCTION_KINDS:
        raise HTTPException(status_code=404, detail=f"Unknown construction '{kind}'")
    try:
        return construction_result(kind, params.model_dump(exclude_none=True))
    except CubeError as e:
        raise http_error(e)
