"""
Random model parameters and estimates
"""

from typing import List, Optional

from pydantic import BaseModel, ValidationError, field_validator, model_validator

from ..cubes.exceptions import DomainError

MAX_SEED = (1 << 64) - 1
DISTRIBUTION_TOLERANCE = 1e-12


class RandomModelParams(BaseModel):
    """
    n i.i.d. random subcubes of Q_d

    Each coordinate is 0 with probability p, 1 with probability p and free
    otherwise. With `codim_distribution` the codimension is drawn from that
    vector instead, the fixed set uniformly and the values uniformly.
    """
    n: int
    d: int
    p: float = 0.0
    seed: int
    codim_distribution: Optional[List[float]] = None

    @field_validator("n")
    @classmethod
    def validate_n(cls, v: int) -> int:
        if v < 0:
            raise ValueError("n must be nonnegative")
        return v

    @field_validator("d")
    @classmethod
    def validate_d(cls, v: int) -> int:
        if v < 1:
            raise ValueError("d must be at least 1")
        return v

    @field_validator("p")
    @classmethod
    def validate_p(cls, v: float) -> float:
        if not 0.0 <= v <= 0.5:
            raise ValueError(f"p must lie in [0, 1/2], got {v}")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        if not 0 <= v <= MAX_SEED:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v

    @model_validator(mode="after")
    def validate_distribution(self):
        dist = self.codim_distribution
        if dist is None:
            return self
        if len(dist) != self.d + 1:
            raise ValueError(f"Codimension distribution needs {self.d + 1} entries, got {len(dist)}")
        if any(x < 0 for x in dist):
            raise ValueError("Codimension probabilities must be nonnegative")
        if abs(sum(dist) - 1.0) > DISTRIBUTION_TOLERANCE:
            raise ValueError(f"Codimension probabilities sum to {sum(dist)}, not 1")
        return self

    @classmethod
    def build(cls, **values) -> "RandomModelParams":
        """Validate, reporting failures as DomainError"""
        try:
            return cls(**values)
        except ValidationError as e:
            raise DomainError(f"Invalid random model parameters: {e}") from e

    def provenance(self) -> str:
        parts = [f"n={self.n}", f"d={self.d}", f"seed={self.seed}"]
        if self.codim_distribution is None:
            parts.insert(2, f"p={self.p}")
        else:
            parts.insert(2, "codim=" + ",".join(f"{x:g}" for x in self.codim_distribution))
        return "random family " + " ".join(parts)


class EdgeEstimate(BaseModel):
    """Monte-Carlo intersection frequency of independent pairs"""
    d: int
    p: float
    pairs: int
    frequency: float
    standard_error: float
    expected: float
    z_score: float
