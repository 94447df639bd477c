"""
Tests for the cubegraph command line
"""
import io
import json
import pytest
from src.cli import run
from src.cli.config import CliConfig
from src.cubes.familyio import read_family
from src.ramsey.config import RamseyConfig

def invoke(*argv):
    """Run one command, returning (exit code, stdout text, stderr text)"""
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()

@pytest.fixture(autouse=True)
def witness_dir(tmp_path, monkeypatch):
    """Keep default witness files inside the test directory"""
    monkeypatch.setattr(CliConfig, "WITNESS_DIR", str(tmp_path / "witnesses"))
    return tmp_path / "witnesses"

@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text("# four copies of the whole square\nd=2\n**\n**\n**\n**\n")
    return path

class TestConstructAndAnalyze:
    """Building families and reading them back"""

    def test_partite_round_trip(self, tmp_path):
        path = tmp_path / "partite.txt"
        code, out, _ = invoke("construct", "partite", "-n", 8, "-d", 4, "-k", 2, "-o", path)
        assert code == 0
        summary = json.loads(out)
        assert summary["n"] == 8
        assert summary["edges"] == 16
        assert summary["output"] == str(path)

        code, out, _ = invoke("analyze", path)
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 8
        assert report["d"] == 4
        assert report["edges"] == 16
        assert report["clique_number"] == 2
        assert report["independence_number"] == 4
        assert report["input"] == str(path)

    def test_construct_to_stdout(self):
        code, out, _ = invoke("construct", "full-codim", "-d", 2, "-r", 2)
        assert code == 0
        assert out.startswith("# construct full-codim d=2 r=2\n")
        assert "d=2\n" in out

    def test_mixed_uses_one_based_coordinates(self):
        code, out, _ = invoke("construct", "mixed", "-d", 2, "--fixed", "1;2", "--format", "json")
        assert code == 0
        document = json.loads(out)
        assert document["members"] == ["0*", "1*", "*0", "*1"]
        assert document["edges"] == 4

    def test_ground_set_kinds_report_json(self):
        code, out, _ = invoke("construct", "mols", "-q", 3, "-r", 3)
        assert code == 0
        document = json.loads(out)
        assert document["n"] == 9
        assert document["edges"] == 27
        assert document["ground_size"] == 9

    def test_analyze_with_clique_sizes(self, k4_file):
        code, out, _ = invoke("analyze", k4_file, "--clique-sizes", "2,3,4,5")
        assert code == 0
        report = json.loads(out)
        assert report["clique_counts"] == {"2": 6, "3": 4, "4": 1, "5": 0}

    def test_analyze_empty_family(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("d=3\n")
        code, out, _ = invoke("analyze", path)
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 0
        assert report["edges"] == 0
        assert report["clique_number"] == 0

    def test_human_output(self, k4_file):
        code, out, _ = invoke("analyze", k4_file, "--human")
        assert code == 0
        assert any(line.startswith("clique_number") and line.endswith("4") for line in out.splitlines())

    def test_optimize(self, tmp_path):
        path = tmp_path / "profile.txt"
        code, out, _ = invoke("optimize", "-n", 8, "-d", 4, "-r", 2, "-o", path)
        assert code == 0
        result = json.loads(out)
        assert result["edges"] == 16
        assert len(read_family(path)) == 8

class TestRamseyCommands:
    """ramsey exact / bounds / blowup / verify"""

    def test_exact_writes_witness(self, tmp_path):
        path = tmp_path / "witness.txt"
        code, out, _ = invoke("ramsey", "exact", "-d", 3, "-k", 4, "-l", 3, "-o", path)
        assert code == 0
        result = json.loads(out)
        assert result["value"] == 8
        assert result["witness_file"] == str(path)
        assert len(read_family(path)) == 7

        code, out, _ = invoke("ramsey", "verify", path, "-k", 4, "-l", 3)
        assert code == 0
        assert json.loads(out)["valid"] is True

    def test_exact_default_witness_location(self, witness_dir):
        code, out, _ = invoke("ramsey", "exact", "-d", 2, "-k", 3, "-l", 3)
        assert code == 0
        assert json.loads(out)["value"] == 5
        assert (witness_dir / "ramsey-d2-k3-l3.txt").exists()

    def test_verify_rejects_clique(self, k4_file):
        code, out, _ = invoke("ramsey", "verify", k4_file, "-k", 3, "-l", 3)
        assert code == 1
        assert json.loads(out)["valid"] is False

    def test_bounds(self):
        code, out, _ = invoke("ramsey", "bounds", "-d", 16, "-k", 10, "-l", 3)
        assert code == 0
        document = json.loads(out)
        assert document["upper_bound"] == "160"
        assert document["trivial_lower_bound"] == 19

    def test_bounds_with_rational_alpha(self):
        code, out, _ = invoke("ramsey", "bounds", "-d", 16, "-k", 10, "-l", 3, "--alpha", "3/2")
        assert code == 0
        document = json.loads(out)
        assert document["alpha"] == "3/2"
        assert document["upper_bound_value"] == pytest.approx((16 / 1.5 + 2 ** 1.5) * 10)

    def test_bounds_with_bad_alpha(self):
        code, _, err = invoke("ramsey", "bounds", "-d", 16, "-k", 10, "-l", 3, "--alpha", "abc")
        assert code == 1
        assert "alpha" in err

    def test_blowup(self, tmp_path):
        path = tmp_path / "blowup.txt"
        code, out, _ = invoke("ramsey", "blowup", "-d", 5, "-k", 6, "-l", 3, "-x", 3, "-o", path)
        assert code == 0
        assert json.loads(out)["value"] == 10
        assert len(read_family(path)) == 10

    def test_interrupt_and_resume(self, tmp_path, monkeypatch):
        monkeypatch.setattr(RamseyConfig, "SPLIT_DEPTH", 3)
        checkpoint = tmp_path / "search.json"
        args = ["ramsey", "exact", "-d", 3, "-k", 4, "-l", 3, "--checkpoint", checkpoint,
                "-o", tmp_path / "w.txt"]

        code, _, err = invoke(*args, "--max-branches", 1)
        assert code == 2
        assert f"checkpoint: {checkpoint}" in err
        assert checkpoint.exists()

        code, out, _ = invoke(*args, "--resume")
        assert code == 0
        assert json.loads(out)["value"] == 8

class TestSampleAndExport:
    """Random families and graph exports"""

    def test_sample_records_seed(self):
        code, out, _ = invoke("sample", "-n", 20, "-d", 5, "-p", 0.25)
        assert code == 0
        document = json.loads(out)
        assert document["n"] == 20
        seed = document["parameters"]["seed"]
        assert f"seed={seed}" in document["provenance"]

        code, again, _ = invoke("sample", "-n", 20, "-d", 5, "-p", 0.25, "--seed", seed)
        assert json.loads(again)["members"] == document["members"]

    def test_sample_pairs(self):
        code, out, _ = invoke("sample", "-n", 0, "-d", 8, "-p", 0.25, "--pairs", 1000, "--seed", 7)
        assert code == 0
        estimate = json.loads(out)
        assert estimate["pairs"] == 1000
        assert estimate["seed"] == 7

    def test_sample_needs_one_variant(self):
        code, _, err = invoke("sample", "-n", 5, "-d", 3)
        assert code == 1
        assert "DomainError" in err
        code, _, _ = invoke("sample", "-n", 5, "-d", 2, "-p", 0.1, "--codim", "0,1,0")
        assert code == 1

    def test_export_graph6(self, k4_file):
        code, out, _ = invoke("export", k4_file, "--format", "graph6")
        assert code == 0
        assert out == "C~\n"

    def test_export_dimacs(self, k4_file, tmp_path):
        path = tmp_path / "k4.dimacs"
        code, _, _ = invoke("export", k4_file, "--format", "dimacs", "-o", path)
        assert code == 0
        lines = path.read_text().splitlines()
        assert "p edge 4 6" in lines
        assert "e 1 2" in lines

    def test_export_json(self, k4_file):
        code, out, _ = invoke("export", k4_file, "--format", "json")
        assert code == 0
        assert json.loads(out)["edges"] == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]

class TestExitCodes:
    """Usage, domain and infeasibility failures"""

    def test_unknown_flag(self):
        code, _, err = invoke("analyze", "x.txt", "--no-such-flag")
        assert code == 1
        assert "UsageError" in err

    def test_unknown_construction(self):
        code, _, _ = invoke("construct", "nonsense", "-d", 3)
        assert code == 1

    def test_missing_file(self, tmp_path):
        code, _, _ = invoke("analyze", tmp_path / "missing.txt")
        assert code == 1

    def test_malformed_family(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0*1\n0x1\n")
        code, _, err = invoke("analyze", path)
        assert code == 1
        assert "ParseError" in err

    def test_infeasible(self):
        code, _, err = invoke("construct", "large-n", "-n", 40, "-d", 4, "-k", 2)
        assert code == 2
        assert "InfeasibleError" in err

    def test_search_cap(self):
        code, _, _ = invoke("ramsey", "exact", "-d", 9, "-k", 3, "-l", 3)
        assert code == 2

    def test_negative_parameter(self):
        code, _, _ = invoke("construct", "partite", "-n", -1, "-d", 3, "-k", 2)
        assert code == 1

    def test_help(self):
        code, _, _ = invoke("--help")
        assert code == 0

if __name__ == "__main__":
    pytest.main([__file__])
