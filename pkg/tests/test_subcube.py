"""
Tests for the subcube value type and its algebra
"""
import random

import pytest

from src.cubes import (
    CubeFamily,
    DegenerateBaseError,
    DimensionError,
    ParseError,
    Point,
    PreconditionError,
    SizeLimitError,
    Subcube,
    all_subcubes,
    apply_symmetry,
    contains,
    enumerate_points,
    extend,
    hamming_distance,
    hyperoctahedral_group,
    intersection,
    intersects,
    parse_subcube,
    project,
)


def random_cube(rng: random.Random, d: int) -> Subcube:
    text = "".join(rng.choice("01*") for _ in range(d))
    return parse_subcube(text)


def point_set(cube: Subcube) -> set:
    return {p.bits for p in enumerate_points(cube)}


class TestParseSubcube:
    """Text form parsing and formatting"""

    def test_single_fixed_coordinate(self):
        cube = parse_subcube("0*")
        assert cube.width == 2
        assert cube.fixed_coordinates() == [0]
        assert cube.values == 0

    def test_full_cube(self):
        cube = parse_subcube("***")
        assert cube == Subcube.full(3)
        assert cube.codimension == 0
        assert cube.dimension == 3

    def test_punctuation_is_ignored(self):
        cube = parse_subcube("(*11)")
        assert str(cube) == "*11"
        assert parse_subcube("(*, 1, 1)") == cube

    def test_round_trip(self):
        for text in ["0", "1", "*", "01*", "*1*0", "110*1"]:
            assert str(parse_subcube(text)) == text

    def test_invalid_character_reports_position(self):
        with pytest.raises(ParseError) as exc:
            parse_subcube("0x1")
        assert exc.value.position == 2

    def test_empty_text(self):
        with pytest.raises(ParseError):
            parse_subcube("")
        with pytest.raises(ParseError):
            parse_subcube("( )")

    def test_canonical_form_is_enforced(self):
        with pytest.raises(ValueError):
            Subcube(2, 0b01, 0b10)

    def test_zero_width_rejected(self):
        with pytest.raises(DimensionError):
            Subcube(0, 0, 0)

    def test_point_parse(self):
        point = Point.parse("101")
        assert point.bits == 0b101
        assert str(point) == "101"
        with pytest.raises(ParseError):
            Point.parse("1*1")


class TestIntersection:
    """Intersection, containment and distance"""

    def test_intersects_examples(self):
        assert intersects(parse_subcube("0*"), parse_subcube("*1"))
        assert not intersects(parse_subcube("0*"), parse_subcube("1*"))
        assert intersects(parse_subcube("**0"), parse_subcube("11*"))

    def test_common_point(self):
        common = intersection(parse_subcube("**0"), parse_subcube("11*"))
        assert str(common) == "110"

    def test_intersection_examples(self):
        assert str(intersection(parse_subcube("0*"), parse_subcube("*1"))) == "01"
        assert str(intersection(parse_subcube("0*"), parse_subcube("0*"))) == "0*"
        assert intersection(parse_subcube("0*"), parse_subcube("1*")) is None

    def test_width_mismatch(self):
        with pytest.raises(DimensionError):
            intersects(parse_subcube("0*"), parse_subcube("0**"))

    def test_hamming_distance_examples(self):
        assert hamming_distance(parse_subcube("000"), parse_subcube("11*")) == 2
        assert hamming_distance(parse_subcube("0*"), parse_subcube("*1")) == 0
        assert hamming_distance(parse_subcube("1*0"), Subcube.full(3)) == 0

    def test_contains(self):
        assert contains(parse_subcube("1**"), parse_subcube("1*0"))
        assert not contains(parse_subcube("1*0"), parse_subcube("1**"))
        assert contains(Subcube.full(2), parse_subcube("01"))
        assert parse_subcube("1*").contains_point(Point.parse("10"))

    def test_point_set_oracle(self):
        """intersects agrees with intersecting the point sets"""
        rng = random.Random(7)
        for _ in range(300):
            d = rng.randint(1, 6)
            a, b = random_cube(rng, d), random_cube(rng, d)
            assert intersects(a, b) == bool(point_set(a) & point_set(b))
            assert intersects(a, b) == intersects(b, a)
            assert (hamming_distance(a, b) == 0) == intersects(a, b)
            common = intersection(a, b)
            if common is not None:
                assert common.dimension <= min(a.dimension, b.dimension)
                assert point_set(common) == point_set(a) & point_set(b)

    def test_hamming_distance_matches_point_pairs(self):
        rng = random.Random(11)
        for _ in range(100):
            d = rng.randint(1, 5)
            a, b = random_cube(rng, d), random_cube(rng, d)
            brute = min((x ^ y).bit_count() for x in point_set(a) for y in point_set(b))
            assert hamming_distance(a, b) == brute


class TestProject:
    """Projection onto the free coordinates of a base"""

    def test_examples(self):
        base = parse_subcube("**0")
        assert str(project(parse_subcube("11*"), base)) == "11"
        assert str(project(parse_subcube("***"), base)) == "**"

    def test_disjoint_input(self):
        with pytest.raises(PreconditionError):
            project(parse_subcube("0*1"), parse_subcube("**0"))

    def test_degenerate_base(self):
        with pytest.raises(DegenerateBaseError):
            project(parse_subcube("1*0"), parse_subcube("110"))

    def test_projection_preserves_intersection(self):
        rng = random.Random(3)
        checked = 0
        while checked < 200:
            d = rng.randint(2, 7)
            base = random_cube(rng, d)
            x, y = random_cube(rng, d), random_cube(rng, d)
            if base.dimension == 0 or not intersects(x, base) or not intersects(y, base):
                continue
            assert intersects(x, y) == intersects(project(x, base), project(y, base))
            checked += 1


class TestEnumeration:
    """Point enumeration and the subcube catalog"""

    def test_examples(self):
        assert [str(p) for p in enumerate_points(parse_subcube("0*"))] == ["00", "01"]
        assert [str(p) for p in enumerate_points(parse_subcube("11"))] == ["11"]
        assert len(enumerate_points(Subcube.full(3))) == 8

    def test_lexicographic_order(self):
        texts = [str(p) for p in enumerate_points(parse_subcube("*1*"))]
        assert texts == ["010", "011", "110", "111"]

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            enumerate_points(Subcube.full(5), cap=4)

    def test_all_subcubes(self):
        cubes = all_subcubes(3)
        assert len(cubes) == 27
        assert len(set(cubes)) == 27
        assert cubes[0] == Subcube.full(3)
        # Every subcube comes after all of its proper supersets
        for i, cube in enumerate(cubes):
            for other in cubes[i + 1:]:
                assert not (contains(other, cube) and other != cube)


class TestSymmetry:
    """Hyperoctahedral action and extension"""

    def test_group_order(self):
        assert len(list(hyperoctahedral_group(3))) == 48

    def test_symmetry_preserves_intersection(self):
        rng = random.Random(5)
        group = list(hyperoctahedral_group(3))
        for _ in range(100):
            a, b = random_cube(rng, 3), random_cube(rng, 3)
            perm, flips = rng.choice(group)
            assert intersects(a, b) == intersects(apply_symmetry(a, perm, flips), apply_symmetry(b, perm, flips))

    def test_apply_symmetry(self):
        cube = parse_subcube("1*0")
        assert str(apply_symmetry(cube, (1, 0, 2))) == "*10"
        assert str(apply_symmetry(cube, (0, 1, 2), flips=0b111)) == "0*1"

    def test_extend(self):
        assert str(extend(parse_subcube("10"), 2)) == "10**"
        family = CubeFamily.parse(["0*", "11"]).extended(1)
        assert family.texts() == ["0**", "11*"]
