"""
Ramsey search models
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..cubes.subcube import CubeFamily


class RamseyResult(BaseModel):
    """R_d(k, l) with a largest family avoiding K_k and an independent l-set"""
    d: int
    k: int
    l: int
    value: int
    witness: List[str] = Field(default_factory=list)
    nodes_explored: int = 0
    elapsed_seconds: float = 0.0
    branches: int = 0
    method: str = "search"
    note: Optional[str] = None

    def witness_family(self) -> CubeFamily:
        return CubeFamily.parse(self.witness, width=self.d)


class BranchOutcome(BaseModel):
    """Best family size inside one branch; witness as candidate indices with repeats"""
    model_config = ConfigDict(frozen=True)

    best: int
    witness: List[int] = Field(default_factory=list)
    nodes: int = 0


class SearchCheckpoint(BaseModel):
    """Frontier of canonical supports and the branches finished so far"""
    format: str
    config_hash: str
    d: int
    k: int
    l: int
    split_depth: int
    frontier: List[List[int]]
    frontier_nodes: int = 0
    completed: Dict[int, BranchOutcome] = Field(default_factory=dict)

    @property
    def nodes_explored(self) -> int:
        return self.frontier_nodes + sum(b.nodes for b in self.completed.values())

    @property
    def pending(self) -> List[int]:
        return [i for i in range(len(self.frontier)) if i not in self.completed]
