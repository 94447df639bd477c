"""
Construction data models
"""

from math import comb
from typing import List

from pydantic import BaseModel, model_validator


class PartiteProfile(BaseModel):
    """Part dimensions d_i and part sizes n_i of an r-partite construction"""
    r: int
    part_dims: List[int]
    part_sizes: List[int]
    objective: int = 0  # sum of binom(n_i, 2)

    @model_validator(mode="after")
    def check_profile(self):
        if len(self.part_dims) != self.r or len(self.part_sizes) != self.r:
            raise ValueError("Profile must list exactly r part dimensions and sizes")
        for d_i, n_i in zip(self.part_dims, self.part_sizes):
            if d_i < 0 or n_i < 0:
                raise ValueError("Part dimensions and sizes must be nonnegative")
            if n_i > 2 ** d_i:
                raise ValueError(f"Part size {n_i} exceeds capacity 2^{d_i}")
        self.objective = sum(comb(n_i, 2) for n_i in self.part_sizes)
        return self

    @property
    def n(self) -> int:
        return sum(self.part_sizes)

    @property
    def d(self) -> int:
        return sum(self.part_dims)

    @property
    def edges(self) -> int:
        """Edges of the complete multipartite graph with these part sizes"""
        return comb(self.n, 2) - self.objective


class OptimizerResult(BaseModel):
    """Optimal profile with enumeration statistics"""
    n: int
    d: int
    r: int
    profile: PartiteProfile
    edges: int
    compositions_enumerated: int
    feasible_compositions: int


class BoundCheck(BaseModel):
    """The two Turan-type upper bounds for a K_{r+1}-free intersection graph"""
    n: int
    d: int
    r: int
    edges: int
    turan_bound: int
    absolute_bound: int
    holds: bool
