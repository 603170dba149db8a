"""Tests for the command-line interface."""

import dataclasses
import io
import json

import pytest

import digitopo
from digitopo import main
from src.codec import graph_to_dot, graph_to_json
from src.graph_core import cycle_graph, is_isomorphic, path_graph
from src.models import Graph
from src.parser import parse_graph


@pytest.fixture
def graph_file(tmp_path):
    def write(g: Graph, name: str = "g.json") -> str:
        path = tmp_path / name
        path.write_text(graph_to_json(g))
        return str(path)

    return write


def run(capsys, argv: list[str]) -> tuple[int, str, str]:
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# =============================================================================
# Test: check and simple
# =============================================================================


class TestCheck:
    """Tests for the check subcommand."""

    def test_c4_negative(self, capsys, graph_file):
        """Test that C4 exits 1 with a bare negative answer."""
        code, out, _ = run(capsys, ["check", "--input", graph_file(cycle_graph(4))])
        assert code == 1
        assert out.strip() == '{"contractible":false}'

    def test_path_positive(self, capsys, graph_file):
        """Test that a path exits 0 with a certificate."""
        g = Graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
        code, out, _ = run(capsys, ["check", "--input", graph_file(g)])
        data = json.loads(out)
        assert code == 0
        assert data["contractible"] is True
        assert len(data["certificate"]["deletion_order"]) == 3

    def test_deep_input_undecided(self, capsys, graph_file):
        """Test that a path too long for the recursion exits 2 with an undecided answer."""
        code, out, err = run(capsys, ["check", "--input", graph_file(path_graph(1500))])
        assert code == 2
        assert json.loads(out) == {"contractible": None, "undecided": True}
        assert "recursion depth" in err

    def test_missing_file(self, capsys):
        """Test that a missing file exits 3."""
        code, _, err = run(capsys, ["check", "--input", "nonexistent.json"])
        assert code == 3
        assert "Error" in err

    def test_malformed_file(self, capsys, tmp_path):
        """Test that a parse error exits 3 with a position."""
        path = tmp_path / "bad.json"
        path.write_text('{"vertices": [')
        code, _, err = run(capsys, ["check", "--input", str(path)])
        assert code == 3
        assert f"{path}:1:" in err

    def test_bad_flag_exits_3(self, capsys):
        """Test that usage errors exit 3."""
        with pytest.raises(SystemExit) as exc_info:
            main(["check", "--budget", "0"])
        assert exc_info.value.code == 3


class TestSimple:
    """Tests for the simple subcommand."""

    def test_c6(self, capsys, graph_file):
        """Test points, edges and sets of C6."""
        code, out, _ = run(capsys, ["simple", "--input", graph_file(cycle_graph(6))])
        data = json.loads(out)
        assert code == 0
        assert data["points"] == []
        assert data["edges"] == []
        assert ["1", "2", "3"] in data["sets"]


# =============================================================================
# Test: thin, invariants, sphere, verify-trace
# =============================================================================


class TestThinCommand:
    """Tests for thinning from the command line."""

    def test_c6(self, capsys, graph_file):
        """Test that C6 gives a C4 skeleton and one contraction."""
        code, out, _ = run(capsys, ["thin", "--input", graph_file(cycle_graph(6))])
        data = json.loads(out)
        assert code == 0
        assert is_isomorphic(parse_graph(json.dumps(data["skeleton"])), cycle_graph(4))
        assert [step["kind"] for step in data["trace"]["steps"]] == ["contract_set"]

    def test_skeleton_only_from_stdin(self, capsys, monkeypatch):
        """Test reading stdin and writing only the skeleton."""
        monkeypatch.setattr("sys.stdin", io.StringIO(graph_to_json(cycle_graph(8))))
        code, out, _ = run(capsys, ["thin", "--skeleton-only"])
        assert code == 0
        assert is_isomorphic(parse_graph(out), cycle_graph(4))

    def test_trace_then_verify(self, capsys, graph_file, tmp_path):
        """Test that an emitted trace verifies against its endpoints."""
        g0 = graph_file(cycle_graph(6))
        trace = str(tmp_path / "trace.json")
        skeleton = str(tmp_path / "skeleton.json")
        run(capsys, ["thin", "--input", g0, "--skeleton-only", "--trace-output", trace, "--output", skeleton])
        code, out, _ = run(capsys, ["verify-trace", "--trace", trace, "--input", g0, "--expect", skeleton])
        assert code == 0
        assert json.loads(out)["valid"] is True

    def test_forged_trace(self, capsys, graph_file, tmp_path):
        """Test that a forged step is rejected at its index."""
        g0 = cycle_graph(6)
        report = str(tmp_path / "report.json")
        run(capsys, ["thin", "--input", graph_file(g0), "--output", report])
        data = json.loads((tmp_path / "report.json").read_text())
        data["trace"]["steps"].append({"kind": "delete_point", "vertex": "4"})
        (tmp_path / "report.json").write_text(json.dumps(data))
        code, out, _ = run(capsys, ["verify-trace", "--trace", report, "--input", graph_file(g0)])
        assert code == 1
        assert json.loads(out)["step_index"] == 1

    def test_wrong_expectation(self, capsys, graph_file, tmp_path):
        """Test that the endpoint must match --expect."""
        g0 = graph_file(cycle_graph(6))
        trace = str(tmp_path / "trace.json")
        run(capsys, ["thin", "--input", g0, "--trace-output", trace])
        other = graph_file(cycle_graph(5), "other.json")
        code, _, _ = run(capsys, ["verify-trace", "--trace", trace, "--input", g0, "--expect", other])
        assert code == 1


class TestGraphOutputs:
    """Tests for commands that emit graphs or invariants."""

    def test_sphere_invariants(self, capsys, monkeypatch):
        """Test sphere output piped into invariants."""
        _, sphere, _ = run(capsys, ["sphere", "--n", "2"])
        monkeypatch.setattr("sys.stdin", io.StringIO(sphere))
        code, out, _ = run(capsys, ["invariants"])
        assert code == 0
        assert json.loads(out) == {"euler": 2, "betti": [1, 0, 1], "clique_counts": [6, 12, 8]}

    def test_invariants_max_dim(self, capsys, graph_file):
        """Test an explicit dimension cap."""
        code, out, _ = run(capsys, ["invariants", "--input", graph_file(cycle_graph(6)), "--max-dim", "1"])
        assert json.loads(out) == {"euler": 0, "betti": [1, 1], "clique_counts": [6, 6]}

    def test_export_dot_round_trip(self, capsys, graph_file):
        """Test DOT export reads back as the same graph."""
        g = cycle_graph(5)
        code, out, _ = run(capsys, ["export-dot", "--input", graph_file(g)])
        assert code == 0
        assert out == graph_to_dot(g)
        assert parse_graph(out) == g

    def test_generate(self, capsys):
        """Test family generation."""
        _, out, _ = run(capsys, ["generate", "--family", "cycle", "--n", "4"])
        assert parse_graph(out) == cycle_graph(4)

    def test_generate_s0(self, capsys):
        """Test that the sphere family at dimension 0 gives two isolated points."""
        code, out, _ = run(capsys, ["generate", "--family", "sphere", "--n", "0"])
        assert code == 0
        assert parse_graph(out) == Graph(["+0", "-0"])

    def test_cubify_graph(self, capsys):
        """Test the unit circle digital model."""
        code, out, _ = run(capsys, ["cubify", "--n", "2", "--radius", "1", "--emit", "graph"])
        assert code == 0
        assert len(parse_graph(out)) == 12

    def test_cubify_needs_radius(self, capsys):
        """Test that a radius or preset is required."""
        code, _, err = run(capsys, ["cubify", "--n", "2"])
        assert code == 3
        assert "--radius" in err

    def test_census(self, capsys):
        """Test the census counts."""
        _, out, _ = run(capsys, ["census", "--max-n", "4"])
        rows = json.loads(out)["rows"]
        assert [row["contractible"] for row in rows] == [1, 1, 2, 5]

    def test_experiment(self, capsys):
        """Test the default experiment preset."""
        code, out, _ = run(capsys, ["experiment"])
        data = json.loads(out)["experiments"][0]
        assert code == 0
        assert data["skeleton_is_minimal_sphere"] is True
        assert data["invariants_preserved"] is True

    def test_experiment_invariant_change_exits_4(self, capsys, monkeypatch):
        """Test that a run whose invariants changed is an internal consistency failure."""
        real = digitopo.run_surface_experiment

        def broken(*args, **kwargs):
            return dataclasses.replace(real(*args, **kwargs), invariants_preserved=False)

        monkeypatch.setattr(digitopo, "run_surface_experiment", broken)
        code, out, err = run(capsys, ["experiment"])
        assert code == 4
        assert json.loads(out)["experiments"][0]["invariants_preserved"] is False
        assert "invariants changed by thinning in circle-1.5" in err
