"""
Tests for the HTTP API
"""
import pytest
from fastapi.testclient import TestClient
from unittest.mock import patch

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from main import app
from src.cache.manager import CacheManager

client = TestClient(app)

@pytest.fixture(autouse=True)
def disabled_cache():
    """Run every route without Redis"""
    with patch('src.cache.decorators.get_cache_manager') as mock_manager, \
            patch('main.get_cache_manager') as mock_main_manager:
        mock_manager.return_value = CacheManager(None)
        mock_main_manager.return_value = CacheManager(None)
        yield

class TestServiceEndpoints:
    """Root and health endpoints"""

    def test_root(self):
        response = client.get("/")
        assert response.status_code == 200
        assert response.json()["message"] == "Cubegraph API"

    def test_health_without_redis(self):
        response = client.get("/health")
        assert response.status_code == 200
        data = response.json()
        assert data["redis"] == "disconnected"
        assert data["features"]["caching"] is False

class TestConstructionRoutes:
    """Named constructions and the optimizer"""

    def test_list_kinds(self):
        response = client.get("/constructions")
        assert response.status_code == 200
        assert "partite" in response.json()["kinds"]

    def test_partite(self):
        response = client.post("/constructions/partite", json={"n": 8, "d": 4, "k": 2})
        assert response.status_code == 200
        data = response.json()
        assert data["n"] == 8
        assert data["d"] == 4
        assert data["edges"] == 16
        assert data["parameters"] == {"n": 8, "d": 4, "k": 2}

    def test_ground_set_kind(self):
        response = client.post("/constructions/mols", json={"q": 3, "r": 3})
        assert response.status_code == 200
        assert response.json()["ground_size"] == 9

    def test_unknown_kind(self):
        response = client.post("/constructions/nonsense", json={"d": 3})
        assert response.status_code == 404

    def test_missing_parameters(self):
        response = client.post("/constructions/partite", json={"d": 4})
        assert response.status_code == 422
        assert "PreconditionError" in response.json()["detail"]

    def test_negative_parameter(self):
        response = client.post("/constructions/partite", json={"n": -1, "d": 4, "k": 2})
        assert response.status_code == 422

    def test_infeasible(self):
        response = client.post("/constructions/large-n", json={"n": 40, "d": 4, "k": 2})
        assert response.status_code == 409
        assert "InfeasibleError" in response.json()["detail"]

    def test_optimize(self):
        response = client.get("/constructions/optimize?n=8&d=4&r=2")
        assert response.status_code == 200
        data = response.json()
        assert data["edges"] == 16
        assert sum(data["profile"]["part_sizes"]) == 8

class TestAnalysisRoute:
    """Family analysis"""

    def test_analysis(self):
        response = client.post("/analysis", json={"d": 2, "members": ["**", "**", "**", "**"]})
        assert response.status_code == 200
        data = response.json()
        assert data["edges"] == 6
        assert data["clique_number"] == 4
        assert data["clique_witness"]["point"] == "00"
        assert data["independence_number"] == 1

    def test_malformed_member(self):
        response = client.post("/analysis", json={"d": 2, "members": ["0x"]})
        assert response.status_code == 422
        assert "ParseError" in response.json()["detail"]

    def test_width_mismatch(self):
        response = client.post("/analysis", json={"d": 2, "members": ["0*1"]})
        assert response.status_code == 422

class TestRamseyRoutes:
    """Exact values, bounds and blow-ups"""

    def test_exact(self):
        response = client.post("/ramsey/exact", json={"d": 2, "k": 3, "l": 3})
        assert response.status_code == 200
        data = response.json()
        assert data["value"] == 5
        assert len(data["witness"]) == 4

    def test_exact_beyond_cap(self):
        response = client.post("/ramsey/exact", json={"d": 9, "k": 3, "l": 3})
        assert response.status_code == 409

    def test_bounds(self):
        response = client.get("/ramsey/bounds?d=3&k=5&l=4")
        assert response.status_code == 200
        data = response.json()
        assert data["upper_bound"] == "90"
        assert data["trivial_lower_bound"] == 13

    def test_bounds_domain(self):
        response = client.get("/ramsey/bounds?d=3&k=1&l=4")
        assert response.status_code == 422

    def test_bounds_with_rational_alpha(self):
        response = client.get("/ramsey/bounds", params={"d": 16, "k": 10, "l": 3, "alpha": "1.5"})
        assert response.status_code == 200
        data = response.json()
        assert data["alpha"] == "3/2"
        assert data["upper_bound_value"] == pytest.approx((16 / 1.5 + 2 ** 1.5) * 10)

    def test_bounds_with_bad_alpha(self):
        response = client.get("/ramsey/bounds", params={"d": 16, "k": 10, "l": 3, "alpha": "0"})
        assert response.status_code == 422

    def test_blowup_from_catalog(self):
        response = client.post("/ramsey/blowup", json={"d": 5, "k": 6, "l": 3, "x": 3})
        assert response.status_code == 200
        data = response.json()
        assert data["value"] == 10
        assert len(data["members"]) == 10
        assert len(data["witness_edges"]) == 5

    def test_blowup_invalid_witness(self):
        triangle = [[0, 1], [1, 2], [0, 2]]
        response = client.post("/ramsey/blowup", json={"d": 3, "k": 6, "l": 3, "x": 3, "edges": triangle})
        assert response.status_code == 422
        assert "InvalidWitnessError" in response.json()["detail"]

    def test_blowup_malformed_edges(self):
        response = client.post("/ramsey/blowup", json={"d": 5, "k": 6, "l": 3, "x": 3, "edges": [[0, 7]]})
        assert response.status_code == 422

class TestRandomRoute:
    """Random families"""

    def test_sample_with_seed(self):
        payload = {"n": 10, "d": 4, "p": 0.25, "seed": 5}
        first = client.post("/random/sample", json=payload)
        second = client.post("/random/sample", json=payload)
        assert first.status_code == 200
        assert first.json()["members"] == second.json()["members"]
        assert first.json()["parameters"]["seed"] == 5

    def test_sample_generates_seed(self):
        response = client.post("/random/sample", json={"n": 5, "d": 3, "p": 0.1})
        assert response.status_code == 200
        seed = response.json()["parameters"]["seed"]
        assert f"seed={seed}" in response.json()["provenance"]

    def test_sample_codimension_variant(self):
        response = client.post("/random/sample", json={
            "n": 30, "d": 2, "seed": 1, "codim_distribution": [0, 1, 0],
        })
        assert response.status_code == 200
        assert response.json()["codimension_histogram"] == [0, 30, 0]

    def test_sample_invalid_probability(self):
        response = client.post("/random/sample", json={"n": 5, "d": 3, "p": 0.7, "seed": 1})
        assert response.status_code == 422

class TestGroundsetRoute:
    """Latin squares, covers and packings"""

    def test_mols(self):
        response = client.post("/groundset/mols", json={"q": 3, "r": 3})
        assert response.status_code == 200
        data = response.json()
        assert data["n"] == 9
        assert data["edges"] == 27

    def test_split(self):
        response = client.post("/groundset/mols", json={"q": 3, "r": 3, "split_to": 12})
        assert response.status_code == 200
        data = response.json()
        assert data["n"] == 12
        assert data["edges"] >= 27

    def test_packing_infeasible(self):
        response = client.post("/groundset/packing", json={"n": 4, "r": 3})
        assert response.status_code == 409

    def test_cover(self):
        response = client.post("/groundset/cover", json={"n": 7, "r": 3})
        assert response.status_code == 200
        assert response.json()["edges"] == 21

    def test_unknown_kind(self):
        response = client.post("/groundset/partite", json={"n": 4})
        assert response.status_code == 404

if __name__ == "__main__":
    pytest.main([__file__])
