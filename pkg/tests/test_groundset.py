"""
Tests for the ground-set constructions
"""
import itertools
import pytest
from math import comb
from src.cubes.exceptions import (
    InfeasibleError,
    PreconditionError,
    TooManySquaresError,
    UnsupportedOrderError,
)
from src.graphs import clique_number, count_cliques
from src.groundset import (
    SetFamily,
    are_orthogonal,
    greedy_packing,
    is_latin_square,
    is_pair_cover,
    is_pair_packing,
    latin_squares,
    mols_family,
    pair_counts,
    pair_cover_family,
    pair_packing_family,
    split_member,
    split_to_size,
    steiner_triple_system,
)

class TestLatinSquares:
    """Cyclic squares and the rows/columns/symbols family"""

    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_squares_are_mutually_orthogonal(self, q):
        squares = latin_squares(q, q - 1)
        assert all(is_latin_square(s) for s in squares)
        for a, b in itertools.combinations(squares, 2):
            assert are_orthogonal(a, b)

    @pytest.mark.parametrize("q,r", [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (5, 3), (5, 6)])
    def test_mols_family_edges(self, q, r):
        family = mols_family(q, r)
        graph = family.intersection_graph()
        assert len(family) == r * q
        assert graph.edge_count() == comb(r, 2) * q * q
        assert family.max_multiplicity() == r

    def test_mols_family_is_clique_free(self):
        graph = mols_family(5, 4).intersection_graph()
        assert count_cliques(graph, 4) > 0
        assert count_cliques(graph, 5) == 0

    def test_members_of_different_classes_meet_once(self):
        family = mols_family(3, 4)
        rows, symbols = family.members[:3], family.members[6:9]
        for a in rows:
            for b in symbols:
                assert len(set(a) & set(b)) == 1

    def test_non_prime_order(self):
        with pytest.raises(UnsupportedOrderError):
            mols_family(4, 3)

    def test_too_many_squares(self):
        with pytest.raises(TooManySquaresError):
            mols_family(3, 5)
        with pytest.raises(TooManySquaresError):
            latin_squares(5, 5)

    def test_r_below_two(self):
        with pytest.raises(PreconditionError):
            mols_family(3, 1)

class TestDesigns:
    """Steiner triple systems, greedy covers and packings"""

    @pytest.mark.parametrize("n,blocks", [(7, 7), (9, 12), (13, 26), (15, 35)])
    def test_steiner_triple_systems(self, n, blocks):
        system = steiner_triple_system(n)
        assert len(system) == blocks
        assert all(c == 1 for c in pair_counts(system, n).values())

    def test_missing_steiner_order(self):
        with pytest.raises(PreconditionError):
            steiner_triple_system(11)

    def test_fano_cover_and_packing(self):
        for family in (pair_cover_family(7, 3), pair_packing_family(7, 3)):
            assert family.ground_size == 7
            assert family.intersection_graph().edge_count() == 21
            assert family.max_multiplicity() == 3
            omega, _ = clique_number(family.intersection_graph())
            assert omega == 7

    def test_greedy_cover(self):
        family = pair_cover_family(6, 3)
        assert is_pair_cover([tuple(b) for b in family.blocks], 6)
        assert family.intersection_graph().edge_count() == 15
        assert family.max_multiplicity() == 3

    def test_greedy_packing(self):
        assert greedy_packing(6, 3) == [(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)]
        family = pair_packing_family(6, 3)
        assert is_pair_packing([tuple(b) for b in family.blocks], 6)
        assert family.intersection_graph().edge_count() == 12
        assert family.members[0] == [1, 2]

    @pytest.mark.parametrize("n,r", [(4, 3), (5, 4), (6, 5), (6, 4)])
    def test_packing_orders_between_r_and_2r_minus_1(self, n, r):
        with pytest.raises(InfeasibleError, match=f"n >= {2 * r - 1}"):
            pair_packing_family(n, r)

    @pytest.mark.parametrize("n,r", [(5, 3), (7, 4)])
    def test_packing_from_2r_minus_1_covers_every_element(self, n, r):
        family = pair_packing_family(n, r)
        assert all(family.members)
        assert is_pair_packing([tuple(b) for b in family.blocks], n)

    def test_single_block(self):
        family = pair_cover_family(3, 3)
        assert family.ground_size == 1
        assert family.members == [[1], [1], [1]]
        assert family.intersection_graph().edge_count() == 3

    def test_invalid_orders(self):
        with pytest.raises(PreconditionError):
            pair_cover_family(5, 1)
        with pytest.raises(InfeasibleError):
            pair_packing_family(2, 3)

class TestSplitting:
    """Member splitting never loses an edge"""

    @pytest.fixture
    def family(self):
        return mols_family(3, 3)

    def test_split_member(self, family):
        before = family.intersection_graph().edge_count()
        split = split_member(family, 0)
        assert len(split) == len(family) + 1
        assert split.members[0] == [1, 2]
        assert split.members[-1] == [3]
        assert split.intersection_graph().edge_count() >= before
        assert split.max_multiplicity() == family.max_multiplicity()

    def test_split_to_size(self, family):
        before = family.intersection_graph().edge_count()
        split = split_to_size(family, 20)
        assert len(split) == 20
        assert split.intersection_graph().edge_count() >= before
        omega, _ = clique_number(split.intersection_graph())
        assert omega <= 3

    def test_split_singleton(self):
        family = SetFamily(ground_size=2, members=[[1], [2]])
        with pytest.raises(PreconditionError):
            split_member(family, 0)
        with pytest.raises(InfeasibleError):
            split_to_size(family, 3)

    def test_split_to_smaller_size(self, family):
        with pytest.raises(PreconditionError):
            split_to_size(family, 3)

    def test_split_empty_family(self):
        with pytest.raises(InfeasibleError):
            split_to_size(SetFamily(ground_size=0, members=[]), 1)

    def test_invalid_member(self):
        with pytest.raises(ValueError):
            SetFamily(ground_size=3, members=[[1, 4]])

if __name__ == "__main__":
    pytest.main([__file__])
