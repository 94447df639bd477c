"""
API route for intersection graph analysis
"""

from fastapi import APIRouter

from ..cubes.exceptions import CubeError
from ..graphs.models import AnalysisReport
from ..services import AnalysisRequest, analyze_members
from .errors import http_error

router = APIRouter(prefix="/analysis", tags=["analysis"])


@router.post("", response_model=AnalysisReport)
def analyze(request: AnalysisRequest):
    """Edges, clique number with a common point, independence number and clique counts"""
    try:
        return analyze_members(request.d, request.members, request.clique_sizes)
    except CubeError as e:
        raise http_error(e)
