"""
Validated command configuration
"""

from typing import List, Optional

from pydantic import BaseModel, ValidationError, field_validator

from ..cubes.exceptions import DomainError
from ..random_model.models import MAX_SEED


class CommandConfig(BaseModel):
    """Everything one invocation needs, checked before dispatch"""
    command: str
    action: Optional[str] = None
    input: Optional[str] = None
    output: Optional[str] = None
    format: Optional[str] = None

    n: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None
    r: Optional[int] = None
    q: Optional[int] = None
    x: Optional[int] = None
    p: Optional[float] = None
    seed: Optional[int] = None
    alpha: Optional[str] = None  # positive rational, parsed by the bounds service

    fixed_sets: Optional[List[List[int]]] = None  # one-based coordinates
    enlarge: bool = False
    codim: Optional[List[float]] = None
    pairs: Optional[int] = None
    clique_sizes: Optional[List[int]] = None
    method: str = "search"

    workers: Optional[int] = None
    checkpoint: Optional[str] = None
    resume: bool = False
    max_branches: Optional[int] = None

    human: bool = False
    verbose: bool = False

    @field_validator("n", "d", "k", "l", "r", "q", "x", "pairs", "max_branches")
    @classmethod
    def validate_nonnegative(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 0:
            raise ValueError("must be nonnegative")
        return v

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError("at least one worker is needed")
        return v

    @field_validator("p")
    @classmethod
    def validate_p(cls, v: Optional[float]) -> Optional[float]:
        if v is not None and not 0.0 <= v <= 0.5:
            raise ValueError(f"p must lie in [0, 1/2], got {v}")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and not 0 <= v <= MAX_SEED:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v

    @field_validator("fixed_sets")
    @classmethod
    def validate_fixed_sets(cls, v: Optional[List[List[int]]]) -> Optional[List[List[int]]]:
        if v is not None and any(c < 1 for coords in v for c in coords):
            raise ValueError("coordinates are numbered from 1")
        return v

    @classmethod
    def build(cls, **values) -> "CommandConfig":
        """Validate, reporting failures as DomainError"""
        try:
            return cls(**values)
        except ValidationError as e:
            raise DomainError(f"Invalid arguments: {e}") from e

    def require(self, *names: str) -> list:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = [f"-{name}" if len(name) == 1 else "--" + name.replace("_", "-") for name in missing]
            raise DomainError(f"'{self.command}' needs " + ", ".join(flags))
        return [getattr(self, name) for name in names]
