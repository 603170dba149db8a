"""Unit tests for the contractibility oracle and simple-point detection."""

import networkx as nx
import pytest

from src.census import connected_atlas_graphs, contractible_census, greedy_oracle_findings
from src.contractibility import (
    ContractibilityCache,
    check_simple_set,
    connected_vertex_sets,
    enumerate_simple_edges,
    enumerate_simple_points,
    enumerate_simple_sets,
    greedy_reduce,
    is_contractible,
    is_contractible_escalating,
    is_simple_edge,
    is_simple_point,
    is_simple_set,
    verify_certificate,
)
from src.errors import NotAnEdgeError, UndecidedError, UnknownVertexError
from src.graph_core import complete_graph, cone, cycle_graph, path_graph, star_graph
from src.models import ContractionCertificate, Graph, OracleBudget, SimpleSetCheck


# =============================================================================
# Test: Oracle
# =============================================================================


class TestIsContractible:
    """Tests for the exact contractibility oracle."""

    def test_k1(self):
        """Test that K1 is contractible with an empty deletion order."""
        result = is_contractible(Graph(["a"]))
        assert result.contractible
        assert result.certificate == ContractionCertificate(())

    def test_c4(self, cache):
        """Test that C4 is not contractible."""
        result = is_contractible(cycle_graph(4), cache=cache)
        assert not result.contractible
        assert result.certificate is None

    def test_s0(self):
        """Test that two isolated points are not contractible."""
        assert not is_contractible(Graph(["a", "b"]))

    def test_empty_graph(self):
        """Test that the empty graph is not contractible."""
        assert not is_contractible(Graph.empty())

    def test_path_and_tree(self, cache):
        """Test that paths and stars are contractible."""
        assert is_contractible(path_graph(6), cache=cache)
        assert is_contractible(star_graph(5), cache=cache)

    def test_cones_contractible(self, cache):
        """Test that every cone over a graph with up to 5 vertices is contractible."""
        for h in nx.graph_atlas_g():
            if 1 <= h.number_of_nodes() <= 5:
                g = cone("x", Graph.from_networkx(h))
                assert is_contractible(g, cache=cache).contractible

    def test_certificate_verifies(self, cache):
        """Test that a returned certificate replays to K1."""
        g = Graph(
            ["a", "b", "c", "d", "e"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("a", "c")],
        )
        result = is_contractible(g, cache=cache)
        assert result.contractible
        assert verify_certificate(g, result.certificate, cache=cache)

    def test_budget_exhausted(self):
        """Test that a tiny budget leaves C4 undecided."""
        with pytest.raises(UndecidedError):
            is_contractible(cycle_graph(4), OracleBudget(1), cache=None)

    def test_deep_recursion_undecided(self):
        """Test that running out of stack on a long path is reported as undecided."""
        with pytest.raises(UndecidedError, match="recursion depth"):
            is_contractible(path_graph(1500), cache=None)

    def test_escalation_decides(self):
        """Test that escalating the budget eventually decides C4."""
        result = is_contractible_escalating(
            cycle_graph(4), OracleBudget(1), attempts=2, cache=None
        )
        assert not result.contractible

    def test_single_attempt_stays_undecided(self):
        """Test that one attempt does not escalate."""
        with pytest.raises(UndecidedError):
            is_contractible_escalating(cycle_graph(4), OracleBudget(1), attempts=1, cache=None)

    def test_budget_must_be_positive(self):
        """Test budget validation."""
        with pytest.raises(ValueError):
            OracleBudget(0)


class TestVerifyCertificate:
    """Tests for certificate replay."""

    def test_forged_order_rejected(self):
        """Test that an order through a non-simple vertex fails."""
        assert not verify_certificate(cycle_graph(4), ContractionCertificate(("1", "2", "3")))

    def test_wrong_length_rejected(self):
        """Test that a short order fails."""
        assert not verify_certificate(path_graph(3), ContractionCertificate(("1",)))

    def test_unknown_label_rejected(self):
        """Test that a label outside the graph fails."""
        assert not verify_certificate(path_graph(3), ContractionCertificate(("1", "9")))

    def test_valid_order(self):
        """Test a hand-written order for P3."""
        assert verify_certificate(path_graph(3), ContractionCertificate(("1", "2")))


# =============================================================================
# Test: Cache
# =============================================================================


class TestContractibilityCache:
    """Tests for the isomorphism-keyed memo."""

    def test_hit_translates_certificate(self, cache, p4):
        """Test that a relabeled graph reuses the stored order in its own labels."""
        is_contractible(p4, cache=cache)
        assert len(cache) == 1
        relabeled = p4.relabel({"a": "w", "b": "x", "c": "y", "d": "z"})
        result = is_contractible(relabeled, cache=cache)
        assert cache.hits == 1
        assert verify_certificate(relabeled, result.certificate, cache=None)

    def test_same_key_not_isomorphic_misses(self, cache):
        """Test that equal keys without an isomorphism do not hit."""
        two_triangles = Graph(
            ["a", "b", "c", "d", "e", "f"],
            [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f")],
        )
        cache.store(two_triangles, None)
        cache.lookup(cycle_graph(6))
        assert cache.hits == 0
        assert cache.misses == 1

    def test_clear(self, cache, p4):
        """Test that clearing empties the memo and its counters."""
        is_contractible(p4, cache=cache)
        cache.clear()
        assert len(cache) == 0
        assert cache.misses == 0

    def test_bounded_size(self):
        """Test that a capped memo empties itself and keeps answering correctly."""
        capped = ContractibilityCache(max_entries=3)
        for n in range(1, 6):
            capped.store(path_graph(n), tuple(str(k) for k in range(1, n)))
            assert len(capped) <= 3
        for g in connected_atlas_graphs(5):
            expected = is_contractible(g, cache=None).contractible
            assert is_contractible(g, cache=capped).contractible == expected
            assert len(capped) <= 3

    def test_cap_must_be_positive(self):
        """Test cache size validation."""
        with pytest.raises(ValueError):
            ContractibilityCache(max_entries=0)

    def test_transparent_on_small_graphs(self, cache):
        """Test that answers match with and without the memo up to 6 vertices."""
        for g in connected_atlas_graphs(6):
            expected = is_contractible(g, cache=None).contractible
            assert is_contractible(g, cache=cache).contractible == expected


# =============================================================================
# Test: Simple points and edges
# =============================================================================


class TestSimplePoints:
    """Tests for simple point detection."""

    def test_path_endpoint(self):
        """Test that an endpoint of P3 is simple."""
        assert is_simple_point(path_graph(3), "1")

    def test_cycle_vertex(self):
        """Test that no vertex of C4 is simple."""
        assert not is_simple_point(cycle_graph(4), "1")

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_complete_graph_vertices(self, n):
        """Test that every vertex of K_n is simple."""
        assert all(is_simple_point(complete_graph(n), v) for v in complete_graph(n))

    def test_unknown_vertex(self):
        """Test that an unknown label raises."""
        with pytest.raises(UnknownVertexError):
            is_simple_point(path_graph(3), "9")

    def test_enumerate_path(self, p4):
        """Test that only the ends of P4 are simple."""
        assert enumerate_simple_points(p4).simple == ["a", "d"]

    def test_enumerate_triangle(self, k3):
        """Test that all vertices of K3 are simple."""
        assert enumerate_simple_points(k3).simple == ["a", "b", "c"]

    def test_enumerate_cycle(self):
        """Test that C4 has no simple point."""
        scan = enumerate_simple_points(cycle_graph(4))
        assert scan.simple == []
        assert scan.undecided == []


class TestSimpleEdges:
    """Tests for simple edge detection."""

    def test_triangle_edge(self, k3):
        """Test that a triangle edge has joint rim K1."""
        assert is_simple_edge(k3, "a", "b")

    def test_cycle_edge(self):
        """Test that a C4 edge has an empty joint rim."""
        assert not is_simple_edge(cycle_graph(4), "1", "2")

    def test_k4_edge(self):
        """Test that a K4 edge has joint rim K2."""
        assert is_simple_edge(complete_graph(4), "1", "2")

    def test_not_an_edge(self):
        """Test that a non-edge raises."""
        with pytest.raises(NotAnEdgeError):
            is_simple_edge(cycle_graph(4), "1", "3")

    def test_enumerate(self, k3):
        """Test edge enumeration order."""
        assert enumerate_simple_edges(k3).simple == [("a", "b"), ("a", "c"), ("b", "c")]


# =============================================================================
# Test: Simple sets
# =============================================================================


class TestSimpleSets:
    """Tests for simple set detection and enumeration."""

    def test_cycle_segment(self):
        """Test that three consecutive vertices of C6 form a simple set."""
        assert is_simple_set(cycle_graph(6), {"1", "2", "3"})

    def test_c4_pair(self):
        """Test that an adjacent pair of C4 has a non-contractible union."""
        g = cycle_graph(4)
        assert not is_simple_set(g, {"1", "2"})
        assert check_simple_set(g, {"1", "2"}) == SimpleSetCheck.UNION_NOT_CONTRACTIBLE

    def test_c4_opposite_pair(self):
        """Test that a non-adjacent pair fails on the set itself."""
        assert check_simple_set(cycle_graph(4), {"1", "3"}) == SimpleSetCheck.SET_NOT_CONTRACTIBLE

    def test_whole_contractible_graph(self):
        """Test that all vertices of a contractible graph form a simple set."""
        g = complete_graph(4)
        assert is_simple_set(g, g.vertices)

    def test_empty_set_rejected(self):
        """Test that the empty set is refused."""
        with pytest.raises(ValueError):
            check_simple_set(cycle_graph(4), set())

    def test_enumerate_c6_triples(self):
        """Test that the six arcs of C6 are found in order."""
        scan = enumerate_simple_sets(cycle_graph(6), 3, 3)
        assert scan.simple == [
            ("1", "2", "3"),
            ("1", "2", "6"),
            ("1", "5", "6"),
            ("2", "3", "4"),
            ("3", "4", "5"),
            ("4", "5", "6"),
        ]

    def test_enumerate_c4(self):
        """Test that C4 has no simple set of size 2 or 3."""
        assert enumerate_simple_sets(cycle_graph(4), 2, 3).simple == []

    def test_enumerate_k1(self):
        """Test that K1 is its own simple set."""
        assert enumerate_simple_sets(Graph(["a"]), 1, 1).simple == [("a",)]

    @pytest.mark.parametrize("bounds", [(0, 1), (2, 1), (1, 5)])
    def test_enumerate_bad_bounds(self, bounds):
        """Test size bound validation."""
        with pytest.raises(ValueError):
            enumerate_simple_sets(cycle_graph(4), *bounds)

    def test_connected_sets_only(self):
        """Test that candidate sets induce connected subgraphs."""
        sets = connected_vertex_sets(path_graph(4), 2, 2)
        assert sets == [("1", "2"), ("2", "3"), ("3", "4")]


# =============================================================================
# Test: Greedy reduction and census
# =============================================================================


class TestGreedyReduce:
    """Tests for greedy simple-point deletion."""

    def test_c4_stays(self):
        """Test that C4 has nothing to delete."""
        reduction = greedy_reduce(cycle_graph(4))
        assert reduction.residue == cycle_graph(4)
        assert reduction.deletions == []

    def test_k4(self):
        """Test that K4 reduces to K1 in three deletions."""
        reduction = greedy_reduce(complete_graph(4))
        assert reduction.deletions == ["1", "2", "3"]
        assert reduction.residue == Graph(["4"])

    def test_contractible_small_graphs_reach_k1(self, cache):
        """Test greedy reduction on every contractible graph up to 5 vertices."""
        for g in connected_atlas_graphs(5):
            if is_contractible(g, cache=cache):
                assert len(greedy_reduce(g, cache=cache).residue) == 1

    def test_budget_flags_undecided(self):
        """Test that an exhausted budget stops the run and flags it."""
        g = cone("x", cycle_graph(4)).relabel({"x": "0"})
        reduction = greedy_reduce(g, OracleBudget(1), cache=None)
        assert reduction.undecided
        assert reduction.deletions == []


class TestCensus:
    """Tests for the small-graph census."""

    def test_counts_up_to_four(self, cache):
        """Test contractible counts 1, 1, 2, 5 with C4 the only exception at n=4."""
        rows = contractible_census(4, cache=cache)
        assert [row.connected for row in rows] == [1, 1, 2, 6]
        assert [row.contractible for row in rows] == [1, 1, 2, 5]
        assert len(rows[3].exceptions) == 1
        assert nx.is_isomorphic(rows[3].exceptions[0].to_networkx(), nx.cycle_graph(4))

    def test_atlas_limit(self):
        """Test that the atlas stops at seven vertices."""
        with pytest.raises(ValueError):
            connected_atlas_graphs(8)

    def test_no_findings_up_to_five(self, cache):
        """Test that greedy and oracle agree on small graphs."""
        assert greedy_oracle_findings(connected_atlas_graphs(5), cache=cache) == []
