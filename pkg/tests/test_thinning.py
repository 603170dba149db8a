"""Unit tests for thinning to skeletons."""

import pytest

from src.census import connected_atlas_graphs
from src.codec import trace_to_dict
from src.contractibility import is_contractible
from src.cubical import intersection_graph, minimal_digital_sphere
from src.errors import UndecidedError
from src.graph_core import complete_graph, cycle_graph, is_isomorphic, path_graph, star_graph
from src.invariants import invariant_summary, invariants_match
from src.models import CubicalModel, Graph, OracleBudget, ThinningConfig, TransformKind
from src.thinning import is_skeleton, thin
from src.transforms import replay


def ring_of_eight() -> Graph:
    """Intersection graph of a 3x3 block of squares without its center."""
    cubes = frozenset((i, j) for i in range(3) for j in range(3) if (i, j) != (1, 1))
    return intersection_graph(CubicalModel(n=2, edge_length=1.0, cubes=cubes))


# =============================================================================
# Test: Cycles
# =============================================================================


class TestThinCycles:
    """Tests for thinning cycles to the minimal 1-sphere."""

    def test_c6_one_contraction(self):
        """Test that C6 thins to C4 with a single contraction of three vertices."""
        report = thin(cycle_graph(6))
        assert report.skeleton == Graph(
            ["4", "5", "6", "z0"], [("4", "5"), ("5", "6"), ("6", "z0"), ("4", "z0")]
        )
        assert len(report.trace) == 1
        step = report.trace.steps[0]
        assert step.kind == TransformKind.CONTRACT_SET
        assert step.members == ("1", "2", "3")
        assert step.z == "z0"
        assert report.stats.sets_contracted == 1
        assert report.stats.points_deleted == 0

    def test_c8(self):
        """Test that C8 reaches a 4-cycle."""
        report = thin(cycle_graph(8))
        assert is_isomorphic(report.skeleton, cycle_graph(4))
        assert report.skeleton.vertices == frozenset({"7", "8", "z0", "z1"})

    def test_pairs_only(self):
        """Test that capping sets at pairs still reaches C4 from C6."""
        report = thin(cycle_graph(6), ThinningConfig(max_set_size=2))
        assert is_isomorphic(report.skeleton, cycle_graph(4))
        assert report.stats.sets_contracted == 2

    def test_pendant_points_removed(self):
        """Test that C4 with two attached simple points loses them in phase 1."""
        g = Graph(
            ["1", "2", "3", "4", "a", "b"],
            [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1"), ("a", "1"), ("a", "2"), ("b", "3")],
        )
        report = thin(g)
        assert report.skeleton == cycle_graph(4)
        assert report.stats.points_deleted == 2
        assert report.stats.sets_contracted == 0

    def test_stats_match_trace(self):
        """Test that the counters agree with the step kinds in the trace."""
        report = thin(ring_of_eight())
        assert report.stats.points_deleted == report.trace.count(TransformKind.DELETE_POINT) == 4
        assert report.stats.sets_contracted == report.trace.count(TransformKind.CONTRACT_SET)
        assert report.stats.points_deleted + report.stats.sets_contracted == len(report.trace)

    def test_ring_of_squares(self):
        """Test that eight squares around a hole thin to C4."""
        g = ring_of_eight()
        report = thin(g)
        assert is_isomorphic(report.skeleton, cycle_graph(4))
        assert invariants_match(invariant_summary(g), invariant_summary(report.skeleton))


# =============================================================================
# Test: Contractible inputs and fixpoints
# =============================================================================


class TestThinFixpoints:
    """Tests for contractible inputs, skeletons and determinism."""

    @pytest.mark.parametrize(
        "g", [complete_graph(5), path_graph(6), star_graph(5), Graph(["a"])]
    )
    def test_contractible_to_k1(self, g):
        """Test that contractible graphs thin to a single vertex."""
        assert len(thin(g).skeleton) == 1

    def test_small_contractible_graphs_to_k1(self, cache):
        """Test every contractible graph up to 6 vertices."""
        for g in connected_atlas_graphs(6):
            if is_contractible(g, cache=cache):
                assert len(thin(g, cache=cache).skeleton) == 1

    def test_octahedron_unchanged(self):
        """Test that the octahedron is already a skeleton."""
        octahedron = minimal_digital_sphere(2)
        report = thin(octahedron)
        assert report.skeleton == octahedron
        assert len(report.trace) == 0

    def test_idempotent(self):
        """Test that thinning a skeleton does nothing."""
        skeleton = thin(cycle_graph(7)).skeleton
        again = thin(skeleton)
        assert again.skeleton == skeleton
        assert len(again.trace) == 0

    def test_deterministic(self):
        """Test that two runs give the same trace."""
        g = ring_of_eight()
        assert trace_to_dict(thin(g).trace) == trace_to_dict(thin(g).trace)

    def test_trace_replays(self):
        """Test that the emitted trace replays with verification."""
        g = ring_of_eight()
        report = thin(g)
        assert replay(report.trace, g) == report.skeleton

    def test_invariants_preserved_on_cycles(self):
        """Test invariant equality between input and skeleton."""
        for n in range(4, 10):
            g = cycle_graph(n)
            assert invariants_match(invariant_summary(g), invariant_summary(thin(g).skeleton))

    def test_undecided_candidates_reported(self, capsys):
        """Test that budget-exhausted candidates are skipped and disclosed."""
        report = thin(cycle_graph(4), ThinningConfig(budget=OracleBudget(1)), cache=None)
        assert report.skeleton == cycle_graph(4)
        assert report.stats.undecided_candidates_skipped > 0
        assert "Warning" in capsys.readouterr().err

    def test_verbose_progress(self, capsys):
        """Test that verbose runs print one line per step."""
        thin(cycle_graph(6), verbose=True)
        assert "Contracted" in capsys.readouterr().err

    def test_set_size_below_two_rejected(self):
        """Test config validation."""
        with pytest.raises(ValueError):
            ThinningConfig(max_set_size=1)


class TestIsSkeleton:
    """Tests for the skeleton predicate."""

    def test_c4(self):
        """Test that C4 is a skeleton."""
        assert is_skeleton(cycle_graph(4))

    def test_c6(self):
        """Test that C6 is not."""
        assert not is_skeleton(cycle_graph(6))

    def test_k1(self):
        """Test that K1 is."""
        assert is_skeleton(Graph(["a"]))

    def test_undecided(self):
        """Test that undecided candidates make the answer undecided."""
        with pytest.raises(UndecidedError):
            is_skeleton(cycle_graph(4), ThinningConfig(budget=OracleBudget(1)), cache=None)
