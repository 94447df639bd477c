"""
API route for random subcube families
"""

from typing import List, Optional

from fastapi import APIRouter
from pydantic import BaseModel

from ..cubes.exceptions import CubeError
from ..random_model import RandomModelParams
from ..services import SampleDocument, generate_seed, sample_document, sample_random_family
from .errors import http_error

router = APIRouter(prefix="/random", tags=["random"])


class SampleRequest(BaseModel):
    """Random model parameters; a missing seed is generated and echoed back"""
    n: int
    d: int
    p: float = 0.0
    seed: Optional[int] = None
    codim_distribution: Optional[List[float]] = None


@router.post("/sample", response_model=SampleDocument)
def sample(request: SampleRequest):
    try:
        values = request.model_dump()
        if values["seed"] is None:
            values["seed"] = generate_seed()
        params = RandomModelParams.build(**values)
        return sample_document(params, sample_random_family(params))
    except CubeError as e:
        raise http_error(e)
