"""
Service-layer data models shared by the HTTP routes and the command line
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator


class ConstructionParams(BaseModel):
    """Parameters of a named construction; each kind reads the ones it needs"""
    n: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    r: Optional[int] = None
    q: Optional[int] = None
    x: Optional[int] = None
    fixed_sets: Optional[List[List[int]]] = None  # zero-based coordinates
    enlarge: bool = False

    @field_validator("n", "d", "k", "r", "q", "x")
    @classmethod
    def validate_nonnegative(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 0:
            raise ValueError("Construction parameters must be nonnegative")
        return v

    def given(self) -> Dict[str, Any]:
        """Parameters that were actually supplied"""
        return self.model_dump(exclude_none=True, exclude_defaults=True)


class ConstructionDocument(BaseModel):
    """A constructed family with its provenance and edge count"""
    kind: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    n: int
    edges: int
    d: Optional[int] = None
    members: List[str] = Field(default_factory=list)
    ground_size: Optional[int] = None
    sets: List[List[int]] = Field(default_factory=list)
    blocks: Optional[List[List[int]]] = None


class AnalysisRequest(BaseModel):
    """A subcube family in text form"""
    d: int
    members: List[str] = Field(default_factory=list)
    clique_sizes: Optional[List[int]] = None

    @field_validator("d")
    @classmethod
    def validate_d(cls, v: int) -> int:
        if v < 0:
            raise ValueError("d must be nonnegative")
        return v


class RamseyRequest(BaseModel):
    d: int
    k: int
    l: int


class BlowupRequest(BaseModel):
    """Blow-up parameters; edges give an abstract witness on d vertices (zero-based)"""
    d: int
    k: int
    l: int
    x: int
    edges: Optional[List[List[int]]] = None


class GroundsetRequest(BaseModel):
    n: Optional[int] = None
    r: Optional[int] = None
    q: Optional[int] = None
    split_to: Optional[int] = None  # split members until the family has this many


class BoundsDocument(BaseModel):
    """Closed-form bounds on R_d(k, l)"""
    d: int
    k: int
    l: int
    trivial_lower_bound: int
    absolute_cap: int
    upper_bound: str  # exact fraction
    upper_bound_value: float
    inductive_bound: str
    classical: Optional[int] = None
    alpha: Optional[str] = None  # exact fraction, when overridden


class BlowupDocument(BaseModel):
    """Blow-up family certifying R_d(k, l) > value"""
    d: int
    k: int
    l: int
    x: int
    value: int
    witness_edges: List[List[int]] = Field(default_factory=list)
    members: List[str] = Field(default_factory=list)


class SampleDocument(BaseModel):
    """A sampled random family with the parameters that reproduce it"""
    parameters: Dict[str, Any]
    provenance: str
    d: int
    n: int
    edges: int
    edge_density: float
    codimension_histogram: List[int]
    members: List[str] = Field(default_factory=list)
