"""
Routes module
API endpoints for constructions, analysis, Ramsey values, random families and ground-set families
"""

from .constructions import router as constructions_router
from .analysis import router as analysis_router
from .ramsey import router as ramsey_router
from .random_model import router as random_router
from .groundset import router as groundset_router

__all__ = [
    "constructions_router",
    "analysis_router",
    "ramsey_router",
    "random_router",
    "groundset_router",
]
