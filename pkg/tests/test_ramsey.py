"""
Tests for the Ramsey search, witnesses and bounds
"""
import random

import pytest
from fractions import Fraction
from src.cubes.exceptions import (
    CheckpointMismatchError,
    DomainError,
    InvalidWitnessError,
    ResourceLimitError,
    SearchInterrupted,
)
from src.graphs import IntersectionGraph, build_graph, clique_number, independence_number
from src.ramsey import (
    RamseySearch,
    absolute_ramsey_cap,
    catalog_witness,
    circulant,
    classical_ramsey,
    inductive_upper_bound,
    load_checkpoint,
    lower_bound_blowup,
    parse_alpha,
    ramsey_bruteforce,
    ramsey_exact,
    search_abstract_witness,
    trivial_lower_bound,
    trivial_witness,
    upper_bound_eval,
    verify_graph_witness,
    verify_witness,
)

# R_3(k, l) for (k, l)
DIMENSION_THREE = {
    (3, 3): 6,
    (4, 3): 8,
    (5, 3): 11,
    (6, 3): 13,
    (3, 4): 8,
    (4, 4): 11,
}

class TestExactSearch:
    """Exact values with verified witnesses"""

    @pytest.mark.parametrize("k,l", sorted(DIMENSION_THREE))
    def test_dimension_three_table(self, k, l):
        result = ramsey_exact(3, k, l)
        assert result.value == DIMENSION_THREE[(k, l)]
        family = result.witness_family()
        assert len(family) == result.value - 1
        assert verify_witness(family, k, l)

    @pytest.mark.parametrize("k", range(2, 7))
    @pytest.mark.parametrize("l", range(2, 6))
    def test_dimension_two_formula(self, k, l):
        assert ramsey_exact(2, k, l).value == (k - 1) * (l - 1) + 1

    @pytest.mark.parametrize("d", [1, 2])
    @pytest.mark.parametrize("k", [2, 3, 4])
    @pytest.mark.parametrize("l", [2, 3, 4])
    def test_agrees_with_bruteforce(self, d, k, l):
        assert ramsey_exact(d, k, l).value == ramsey_bruteforce(d, k, l).value

    def test_bruteforce_witness(self):
        result = ramsey_bruteforce(2, 3, 3)
        assert result.value == 5
        assert result.method == "bruteforce"
        assert verify_witness(result.witness_family(), 3, 3)

    def test_closed_form_when_l_exceeds_points(self):
        result = ramsey_exact(1, 3, 3)
        assert result.method == "closed-form"
        assert result.value == absolute_ramsey_cap(1, 3) == 5
        assert len(result.witness) == 4

    def test_matches_classical_value(self):
        assert ramsey_exact(3, 3, 3).value == classical_ramsey(3, 3) == 6

    def test_monotone_across_table(self):
        table = {(3, k, l): value for (k, l), value in DIMENSION_THREE.items()}
        table.update({(2, k, l): (k - 1) * (l - 1) + 1 for k in range(2, 7) for l in range(2, 6)})
        for (d, k, l), value in table.items():
            for step in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                bigger = (d + step[0], k + step[1], l + step[2])
                if bigger in table:
                    assert table[bigger] >= value, (d, k, l)

    def test_monotone_in_dimension(self):
        assert ramsey_exact(2, 4, 3).value <= ramsey_exact(3, 4, 3).value

    def test_worker_count_does_not_change_result(self):
        serial = ramsey_exact(2, 3, 3, workers=1, split_depth=3)
        parallel = ramsey_exact(2, 3, 3, workers=2, split_depth=3)
        assert parallel.value == serial.value
        assert parallel.witness == serial.witness

    def test_relabelled_candidates(self):
        result = ramsey_exact(2, 3, 3, relabel=((1, 0), 0b01))
        assert result.value == 5
        assert verify_witness(result.witness_family(), 3, 3)

    @pytest.mark.parametrize("k,l", [(4, 3), (3, 4), (5, 3)])
    def test_relabelled_dimension_three(self, k, l):
        rng = random.Random(31 * k + l)
        for _ in range(4):
            perm = tuple(rng.sample(range(3), 3))
            flips = rng.randrange(8)
            result = ramsey_exact(3, k, l, relabel=(perm, flips))
            assert result.value == DIMENSION_THREE[(k, l)]
            assert verify_witness(result.witness_family(), k, l)

    def test_closed_form_ignores_search_cap(self):
        result = ramsey_exact(5, 2, 40)
        assert result.method == "closed-form"
        assert result.value == 33

    def test_search_cap(self):
        with pytest.raises(ResourceLimitError):
            ramsey_exact(9, 3, 3)

    def test_invalid_orders(self):
        with pytest.raises(DomainError):
            ramsey_exact(2, 1, 3)

class TestCheckpoints:
    """Interrupted searches resume to the same answer"""

    def test_interrupt_and_resume(self, tmp_path):
        path = tmp_path / "search.json"
        fresh = ramsey_exact(3, 4, 3, split_depth=3)

        with pytest.raises(SearchInterrupted) as excinfo:
            ramsey_exact(3, 4, 3, split_depth=3, checkpoint_path=path, max_branches=1)
        assert excinfo.value.checkpoint_path == str(path)
        checkpoint = load_checkpoint(path)
        assert len(checkpoint.completed) == 1
        assert checkpoint.pending

        resumed = ramsey_exact(3, 4, 3, split_depth=3, checkpoint_path=path, resume=True)
        assert resumed.value == fresh.value == 8
        assert resumed.witness == fresh.witness

    def test_checkpoint_mismatch(self, tmp_path):
        path = tmp_path / "search.json"
        with pytest.raises(SearchInterrupted):
            ramsey_exact(3, 4, 3, split_depth=3, checkpoint_path=path, max_branches=1)
        with pytest.raises(CheckpointMismatchError):
            ramsey_exact(3, 5, 3, split_depth=3, checkpoint_path=path, resume=True)

    def test_config_hash_ignores_workers(self):
        assert RamseySearch(3, 4, 3, workers=1).config_hash == RamseySearch(3, 4, 3, workers=4).config_hash
        assert RamseySearch(3, 4, 3).config_hash != RamseySearch(3, 4, 4).config_hash

class TestWitnesses:
    """Abstract witness graphs and the blow-up"""

    def test_catalog_entries(self):
        assert verify_graph_witness(catalog_witness(3, 3), 3, 3)
        assert catalog_witness(4, 3).n == 8

    def test_search_abstract_witness(self):
        graph = search_abstract_witness(5, 3, 3)
        assert graph is not None
        assert verify_graph_witness(graph, 3, 3)
        assert search_abstract_witness(6, 3, 3) is None

    def test_blowup_of_five_cycle(self):
        bound, family = lower_bound_blowup(5, 6, 3, circulant(5, [1]), 3)
        assert bound == 10
        assert len(family) == 10
        graph = build_graph(family)
        omega, _ = clique_number(graph)
        assert omega < 6
        assert independence_number(graph) < 3

    def test_blowup_with_too_few_copies(self):
        bound, family = lower_bound_blowup(5, 2, 3, circulant(5, [1]), 3)
        assert bound == 0
        assert len(family) == 0

    def test_blowup_rejects_invalid_witness(self):
        triangle = IntersectionGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(InvalidWitnessError):
            lower_bound_blowup(3, 6, 3, triangle, 3)
        with pytest.raises(InvalidWitnessError):
            lower_bound_blowup(4, 6, 3, circulant(5, [1]), 3)

    def test_trivial_witness(self):
        family = trivial_witness(3, 4, 3)
        assert len(family) == trivial_lower_bound(4, 3) - 1 == 6
        assert verify_witness(family, 4, 3)

class TestBounds:
    """Closed-form upper bounds"""

    def test_triangle_free_bound(self):
        assert upper_bound_eval(16, 10, 3) == 160

    def test_power_bound(self):
        assert upper_bound_eval(3, 5, 4) == 90

    def test_dimension_two_bound(self):
        assert upper_bound_eval(2, 3, 4) == 18
        assert inductive_upper_bound(2, 3, 4) == 18

    def test_alpha_variant(self):
        assert upper_bound_eval(16, 10, 3, alpha=2) == (Fraction(16, 2) + 4) * 10

    def test_rational_alpha(self):
        assert parse_alpha("3/2") == parse_alpha("1.5") == Fraction(3, 2)
        bound = upper_bound_eval(16, 10, 3, alpha="3/2")
        assert bound.denominator > 1
        assert float(bound) == pytest.approx((16 / 1.5 + 2 ** 1.5) * 10, rel=1e-9)
        assert upper_bound_eval(16, 10, 3, alpha=Fraction(3, 2)) == bound

    @pytest.mark.parametrize("text", ["abc", "1/0", "0", "-3/2"])
    def test_rejected_alpha(self, text):
        with pytest.raises(DomainError):
            parse_alpha(text)

    def test_inductive_bound(self):
        assert inductive_upper_bound(3, 4, 3) == 2 * 4 * (2 ** 2 - 1)

    def test_exact_values_within_bounds(self):
        for (k, l), value in DIMENSION_THREE.items():
            assert value <= upper_bound_eval(3, k, l)
            assert value >= trivial_lower_bound(k, l)

    def test_bound_domain(self):
        with pytest.raises(DomainError):
            upper_bound_eval(0, 3, 3)
        with pytest.raises(DomainError):
            upper_bound_eval(8, 3, 3, alpha=0)

if __name__ == "__main__":
    pytest.main([__file__])
