"""
Splitting members into two disjoint halves

Any set meeting A meets one of the halves and the halves are disjoint, so a
split adds a vertex without removing an edge or creating a new clique size.
"""

import logging

from ..cubes.exceptions import InfeasibleError, PreconditionError
from .models import SetFamily

logger = logging.getLogger(__name__)


def split_member(family: SetFamily, index: int) -> SetFamily:
    """Replace member `index` by its lower and upper halves, the upper one appended"""
    if not 0 <= index < len(family):
        raise PreconditionError(f"Member index {index} out of range")
    member = family.members[index]
    if len(member) < 2:
        raise PreconditionError(f"Member {member} has a single element and cannot be split")
    cut = (len(member) + 1) // 2
    members = [list(m) for m in family.members]
    members[index] = member[:cut]
    members.append(member[cut:])
    return SetFamily(ground_size=family.ground_size, members=members, blocks=family.blocks)


def split_to_size(family: SetFamily, target_n: int) -> SetFamily:
    """Split the largest member (lowest index on ties) until there are `target_n` members"""
    if target_n < len(family):
        raise PreconditionError(f"Family already has {len(family)} > {target_n} members")
    current = family
    if target_n > len(family) and not family.members:
        raise InfeasibleError("An empty family cannot be split")
    while len(current) < target_n:
        index = max(range(len(current)), key=lambda i: (len(current.members[i]), -i))
        if len(current.members[index]) < 2:
            raise InfeasibleError(f"All members are singletons; cannot reach {target_n} members")
        current = split_member(current, index)
    logger.debug(f"Split family from {len(family)} to {len(current)} members")
    return current
