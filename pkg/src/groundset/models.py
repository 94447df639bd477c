"""
Ground-set family models
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, field_validator, model_validator

from ..graphs.graph import IntersectionGraph


class SetFamily(BaseModel):
    """
    Subsets A_1..A_n of the ground set {1..m}

    `blocks` keeps the design the family was dualized from, when there is one.
    """
    ground_size: int
    members: List[List[int]]
    blocks: Optional[List[List[int]]] = None

    @field_validator("members")
    @classmethod
    def normalize_members(cls, v: List[List[int]]) -> List[List[int]]:
        normalized = []
        for member in v:
            if not member:
                raise ValueError("Family members must be nonempty")
            normalized.append(sorted(set(member)))
        return normalized

    @model_validator(mode="after")
    def check_ground(self):
        if self.ground_size < 0:
            raise ValueError("Ground size must be nonnegative")
        for member in self.members:
            if member[0] < 1 or member[-1] > self.ground_size:
                raise ValueError(f"Member {member} is not a subset of 1..{self.ground_size}")
        return self

    def __len__(self) -> int:
        return len(self.members)

    def element_counts(self) -> Dict[int, int]:
        counts = {a: 0 for a in range(1, self.ground_size + 1)}
        for member in self.members:
            for a in member:
                counts[a] += 1
        return counts

    def max_multiplicity(self) -> int:
        """Largest number of members sharing one ground element"""
        return max(self.element_counts().values(), default=0)

    def intersection_graph(self) -> IntersectionGraph:
        return IntersectionGraph.from_sets(self.members)


def intersection_graph(family: SetFamily) -> IntersectionGraph:
    return family.intersection_graph()


def max_multiplicity(family: SetFamily) -> int:
    return family.max_multiplicity()
