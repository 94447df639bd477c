"""
Subcube value type and its algebra

A subcube of {0,1}^d is a word over {0,1,*}. It is stored as two bit
vectors packed into Python integers: `fixed` has bit i set iff coordinate
i+1 is fixed, `values` holds the fixed value at those bits. Coordinate 1 is
the least significant bit and the first character of the text form.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .config import CubeConfig
from .exceptions import (
    DegenerateBaseError,
    DimensionError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)

logger = logging.getLogger(__name__)

# Characters dropped before parsing, so "(*,1,1)" reads like "*11"
_PUNCTUATION = "()[], \t"


def _mask(width: int) -> int:
    return (1 << width) - 1


@dataclass(frozen=True, slots=True)
class Point:
    """A point x of {0,1}^d"""
    width: int
    bits: int

    def __post_init__(self):
        if self.width < 1:
            raise DimensionError("Point width must be at least 1")
        if self.bits < 0 or self.bits >> self.width:
            raise DimensionError(f"Point bits do not fit in width {self.width}")

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.width))

    @classmethod
    def parse(cls, text: str) -> "Point":
        """Parse a 0/1 string into a point"""
        cube = parse_subcube(text)
        if cube.dimension:
            raise ParseError(f"'{text}' is not a point")
        return cls(cube.width, cube.values)


@dataclass(frozen=True, slots=True)
class Subcube:
    """An element of C_d = {0,1,*}^d in canonical bit-packed form"""
    width: int
    fixed: int
    values: int

    def __post_init__(self):
        if self.width < 1:
            raise DimensionError("Subcube width must be at least 1")
        if self.fixed < 0 or self.fixed >> self.width:
            raise DimensionError(f"Fixed mask does not fit in width {self.width}")
        if self.values & ~self.fixed:
            raise ValueError("Value bits set at free coordinates (non-canonical form)")

    @classmethod
    def full(cls, width: int) -> "Subcube":
        """The whole cube (*,...,*)"""
        return cls(width, 0, 0)

    @classmethod
    def point(cls, bits: int, width: int) -> "Subcube":
        """The singleton subcube {x}"""
        return cls(width, _mask(width), bits)

    @property
    def free(self) -> int:
        return _mask(self.width) & ~self.fixed

    @property
    def codimension(self) -> int:
        return self.fixed.bit_count()

    @property
    def dimension(self) -> int:
        return self.width - self.codimension

    def fixed_coordinates(self) -> List[int]:
        """F(u) as zero-based coordinate indices in ascending order"""
        return [i for i in range(self.width) if (self.fixed >> i) & 1]

    def free_coordinates(self) -> List[int]:
        return [i for i in range(self.width) if not (self.fixed >> i) & 1]

    def char(self, i: int) -> str:
        if not (self.fixed >> i) & 1:
            return "*"
        return "1" if (self.values >> i) & 1 else "0"

    def __str__(self) -> str:
        return "".join(self.char(i) for i in range(self.width))

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.width, self.fixed, self.values)

    def contains_point(self, point: Point) -> bool:
        if point.width != self.width:
            raise DimensionError(f"Point width {point.width} != subcube width {self.width}")
        return (point.bits & self.fixed) == self.values


def parse_subcube(text: str) -> Subcube:
    """
    Parse the {0,1,*} text form of a subcube

    Parentheses, commas and whitespace are ignored. Character i of the
    remaining text sets coordinate i+1.
    """
    if text is None:
        raise ParseError("Subcube text is missing")
    stripped = "".join(ch for ch in text if ch not in _PUNCTUATION)
    if not stripped:
        raise ParseError("Subcube text is empty")

    fixed = 0
    values = 0
    for i, ch in enumerate(stripped):
        if ch == "*":
            continue
        if ch not in "01":
            raise ParseError(f"Invalid character '{ch}' in subcube '{text}'", position=i + 1)
        fixed |= 1 << i
        if ch == "1":
            values |= 1 << i
    return Subcube(len(stripped), fixed, values)


def _check_widths(a: Subcube, b: Subcube) -> None:
    if a.width != b.width:
        raise DimensionError(f"Width mismatch: {a.width} != {b.width}")


def conflict_mask(a: Subcube, b: Subcube) -> int:
    """Coordinates fixed in both with different values"""
    _check_widths(a, b)
    return a.fixed & b.fixed & (a.values ^ b.values)


def intersects(a: Subcube, b: Subcube) -> bool:
    return conflict_mask(a, b) == 0


def intersection(a: Subcube, b: Subcube) -> Optional[Subcube]:
    """The common subcube of a and b, or None when they are disjoint"""
    if conflict_mask(a, b):
        return None
    return Subcube(a.width, a.fixed | b.fixed, a.values | b.values)


def contains(outer: Subcube, inner: Subcube) -> bool:
    """True iff inner is a subset of outer"""
    _check_widths(outer, inner)
    return (outer.fixed & ~inner.fixed) == 0 and (inner.values & outer.fixed) == outer.values


def hamming_distance(a: Subcube, b: Subcube) -> int:
    """Minimum Hamming distance between a point of a and a point of b"""
    return conflict_mask(a, b).bit_count()


def project(x: Subcube, base: Subcube) -> Subcube:
    """
    Restrict x to the free coordinates of base

    For subcubes meeting base, intersection is preserved: two such cubes
    intersect iff their projections do.
    """
    if not intersects(x, base):
        raise PreconditionError(f"Cannot project {x} onto disjoint base {base}")
    free = base.free_coordinates()
    if not free:
        raise DegenerateBaseError(f"Base {base} has no free coordinates")

    fixed = 0
    values = 0
    for j, i in enumerate(free):
        if (x.fixed >> i) & 1:
            fixed |= 1 << j
            values |= ((x.values >> i) & 1) << j
    return Subcube(len(free), fixed, values)


def enumerate_points(cube: Subcube, cap: Optional[int] = None) -> List[Point]:
    """All points of the subcube in lexicographic order of their text form"""
    cap = CubeConfig.ENUMERATION_CAP if cap is None else cap
    if cube.dimension > cap:
        raise SizeLimitError(
            f"Subcube {cube} has dimension {cube.dimension}, enumeration cap is {cap}"
        )
    return [Point(cube.width, bits) for bits in iter_point_bits(cube)]


def iter_point_bits(cube: Subcube) -> Iterator[int]:
    """Point bit vectors of a subcube, lexicographic in text order"""
    free = cube.free_coordinates()
    f = len(free)
    for t in range(1 << f):
        bits = cube.values
        # The first free coordinate is the most significant digit of t
        for j, i in enumerate(free):
            if (t >> (f - 1 - j)) & 1:
                bits |= 1 << i
        yield bits


def extend(cube: Subcube, extra: int) -> Subcube:
    """Append `extra` free coordinates"""
    if extra < 0:
        raise DimensionError("Cannot remove coordinates with extend")
    return Subcube(cube.width + extra, cube.fixed, cube.values)


def _permute_bits(bits: int, perm: Sequence[int]) -> int:
    out = 0
    for i, target in enumerate(perm):
        if (bits >> i) & 1:
            out |= 1 << target
    return out


def apply_symmetry(cube: Subcube, perm: Sequence[int], flips: int = 0) -> Subcube:
    """
    Image of a subcube under a hyperoctahedral symmetry

    Coordinate i moves to perm[i]; afterwards the values of the fixed
    coordinates in `flips` are complemented.
    """
    if len(perm) != cube.width:
        raise DimensionError(f"Permutation of length {len(perm)} for width {cube.width}")
    fixed = _permute_bits(cube.fixed, perm)
    values = _permute_bits(cube.values, perm) ^ (flips & fixed)
    return Subcube(cube.width, fixed, values)


def all_subcubes(width: int) -> List[Subcube]:
    """
    The 3^d elements of C_d

    Ordered by dimension descending, then fixed mask, then values, so every
    subcube appears after all of its proper supersets.
    """
    cubes = []
    full = _mask(width)
    for fixed in range(full + 1):
        for values in submasks(fixed):
            cubes.append(Subcube(width, fixed, values))
    cubes.sort(key=lambda c: (c.codimension, c.fixed, c.values))
    return cubes


def submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class CubeFamily:
    """An ordered multiset of subcubes of equal width (vertex i is member i)"""

    __slots__ = ("width", "members")

    def __init__(self, width: int, members: Iterable[Subcube] = ()):
        self.width = width
        self.members: Tuple[Subcube, ...] = tuple(members)
        if self.members and width < 1:
            raise DimensionError("Family width must be at least 1")
        for cube in self.members:
            if cube.width != width:
                raise DimensionError(f"Member {cube} has width {cube.width}, family width is {width}")

    @classmethod
    def parse(cls, texts: Iterable[str], width: Optional[int] = None) -> "CubeFamily":
        cubes = [parse_subcube(t) for t in texts]
        if width is None:
            width = cubes[0].width if cubes else 0
        return cls(width, cubes)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subcube]:
        return iter(self.members)

    def __getitem__(self, index: int) -> Subcube:
        return self.members[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeFamily):
            return NotImplemented
        return self.width == other.width and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.width, self.members))

    def __repr__(self) -> str:
        return f"CubeFamily(d={self.width}, [{', '.join(str(c) for c in self.members)}])"

    def texts(self) -> List[str]:
        return [str(c) for c in self.members]

    def with_members(self, members: Iterable[Subcube]) -> "CubeFamily":
        return CubeFamily(self.width, members)

    def repeated(self, copies: int) -> "CubeFamily":
        """Each member repeated `copies` times, copies kept adjacent"""
        return CubeFamily(self.width, [c for c in self.members for _ in range(copies)])

    def extended(self, extra: int) -> "CubeFamily":
        return CubeFamily(self.width + extra, [extend(c, extra) for c in self.members])


def hyperoctahedral_group(width: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """All (perm, flips) pairs; 2^d * d! elements"""
    for perm in itertools.permutations(range(width)):
        for flips in range(1 << width):
            yield perm, flips
