"""
Translation of library errors into HTTP responses
"""

import logging

from fastapi import HTTPException

from ..cubes.exceptions import CubeError

logger = logging.getLogger(__name__)

# Library exit code -> HTTP status
STATUS_BY_EXIT_CODE = {1: 422, 2: 409}


def http_error(error: CubeError) -> HTTPException:
    """422 for domain errors, 409 for infeasible or resource errors"""
    status = STATUS_BY_EXIT_CODE.get(error.exit_code, 422)
    logger.info(f"{type(error).__name__}: {error}")
    return HTTPException(status_code=status, detail=f"{type(error).__name__}: {error}")
