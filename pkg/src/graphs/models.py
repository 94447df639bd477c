"""
Graph analysis data models
"""

from pydantic import BaseModel
from typing import Dict, List, Optional


class CliqueWitness(BaseModel):
    """A clique together with a point common to all of its subcubes"""
    vertices: List[int] = []
    point: Optional[str] = None  # text form, None for abstract graphs

    model_config = {"frozen": True}


class AnalysisReport(BaseModel):
    """Structured analysis of an intersection graph"""
    n: int
    d: int
    edges: int
    clique_number: int
    clique_witness: CliqueWitness
    independence_number: int
    independent_set: List[int] = []
    clique_counts: Dict[int, int] = {}
    max_point_multiplicity: Optional[int] = None
