"""
Services shared by the HTTP routes and the command line
"""

from .models import (
    ConstructionParams, ConstructionDocument, AnalysisRequest, RamseyRequest,
    BlowupRequest, GroundsetRequest, BoundsDocument, BlowupDocument, SampleDocument,
)
from .constructions import (
    CONSTRUCTION_KINDS, SET_KINDS, construct, construction_document, provenance,
    construction_result,
)
from .computations import (
    analyze_members, optimize_profile, exact_ramsey, ramsey_bounds, blowup_witness,
    blowup_lower_bound, generate_seed, sample_random_family, sample_document,
)

__all__ = [
    "ConstructionParams",
    "ConstructionDocument",
    "AnalysisRequest",
    "RamseyRequest",
    "BlowupRequest",
    "GroundsetRequest",
    "BoundsDocument",
    "BlowupDocument",
    "SampleDocument",
    "CONSTRUCTION_KINDS",
    "SET_KINDS",
    "construct",
    "construction_document",
    "provenance",
    "construction_result",
    "analyze_members",
    "optimize_profile",
    "exact_ramsey",
    "ramsey_bounds",
    "blowup_witness",
    "blowup_lower_bound",
    "generate_seed",
    "sample_random_family",
    "sample_document",
]
