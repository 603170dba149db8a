"""Graph constructions: induced subgraphs, rims, balls, joins and cones."""

from collections.abc import Iterable

import networkx as nx

from .errors import LabelCollisionError
from .models import Graph, VertexLabel

WL_ITERATIONS = 3


def induced_subgraph(g: Graph, labels: Iterable[VertexLabel]) -> Graph:
    """Subgraph on ``labels`` with every edge of ``g`` between them."""
    return g.subgraph(g.require(labels))


def rim(g: Graph, v: VertexLabel) -> Graph:
    """Rim O(v): the subgraph on the neighbors of ``v``, without ``v``."""
    return g.subgraph(g.neighbors(v))


def ball(g: Graph, v: VertexLabel) -> Graph:
    """Ball U(v): the subgraph on ``v`` and its neighbors."""
    return g.subgraph(g.neighbors(v) | {v})


def joint_rim(g: Graph, u: VertexLabel, v: VertexLabel) -> Graph:
    """Subgraph on the common neighbors of ``u`` and ``v``.

    Defined whether or not ``u`` and ``v`` are adjacent; for an edge this
    is O(uv) = O(u) ∩ O(v).
    """
    return g.subgraph(g.neighbors(u) & g.neighbors(v))


def join(g: Graph, h: Graph) -> Graph:
    """Join G ⊕ H: both graphs plus every edge between them.

    Raises:
        LabelCollisionError: If the two graphs share vertex labels
    """
    shared = g.vertices & h.vertices
    if shared:
        raise LabelCollisionError(list(shared))
    cross = ((u, v) for u in g.vertices for v in h.vertices)
    return Graph(g.vertices | h.vertices, [*g.edges, *h.edges, *cross])


def cone(apex: VertexLabel, g: Graph) -> Graph:
    """Cone v ⊕ G with a fresh apex."""
    return join(Graph([apex]), g)


def external_neighborhood(g: Graph, labels: Iterable[VertexLabel]) -> frozenset[VertexLabel]:
    """Vertices outside ``labels`` adjacent to at least one of them."""
    members = g.require(labels)
    outside: set[VertexLabel] = set()
    for v in members:
        outside |= g.neighbors(v)
    return frozenset(outside - members)


def neighborhood_union(g: Graph, labels: Iterable[VertexLabel]) -> Graph:
    """U(S): the subgraph on the union of the balls of the members of S."""
    members = g.require(labels)
    if not members:
        raise ValueError("Neighborhood union of an empty set")
    return g.subgraph(members | external_neighborhood(g, members))


# =============================================================================
# Isomorphism
# =============================================================================


def _degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(len(g.neighbors(v)) for v in g.vertices))


def find_isomorphism(g: Graph, h: Graph) -> dict[VertexLabel, VertexLabel] | None:
    """Edge-preserving bijection from ``g`` onto ``h``, or None.

    Exact VF2++ search; intended for desk-scale graphs.
    """
    if len(g) != len(h) or g.edge_count != h.edge_count:
        return None
    if _degree_sequence(g) != _degree_sequence(h):
        return None
    if len(g) == 0:
        return {}
    return nx.vf2pp_isomorphism(g.to_networkx(), h.to_networkx())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Whether an edge-preserving bijection between the vertex sets exists."""
    return find_isomorphism(g, h) is not None


def _compute_key(g: Graph) -> tuple[int, int, tuple[int, ...], str]:
    if len(g) == 0:
        return (0, 0, (), "")
    wl_hash = nx.weisfeiler_lehman_graph_hash(g.to_networkx(), iterations=WL_ITERATIONS)
    return (len(g), g.edge_count, _degree_sequence(g), wl_hash)


def canonical_key(g: Graph) -> tuple[int, int, tuple[int, ...], str]:
    """Isomorphism invariant from iterated degree refinement.

    Unequal keys imply non-isomorphic graphs; equal keys do not imply
    isomorphism, so lookups keyed on it must confirm with is_isomorphic.
    """
    return g.cached("canonical_key", _compute_key)


# =============================================================================
# Families
# =============================================================================


def _numbered(n: int) -> list[VertexLabel]:
    if n < 0:
        raise ValueError(f"Graph order must be non-negative, got {n}")
    return [str(i) for i in range(1, n + 1)]


def path_graph(n: int) -> Graph:
    """Path on vertices "1".."n"."""
    labels = _numbered(n)
    return Graph(labels, zip(labels, labels[1:]))


def cycle_graph(n: int) -> Graph:
    """Cycle C_n on vertices "1".."n"; needs n >= 3."""
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    labels = _numbered(n)
    return Graph(labels, zip(labels, labels[1:] + labels[:1]))


def complete_graph(n: int) -> Graph:
    """Complete graph K_n on vertices "1".."n"."""
    labels = _numbered(n)
    return Graph(labels, ((u, v) for i, u in enumerate(labels) for v in labels[i + 1 :]))


def star_graph(n: int) -> Graph:
    """Center "1" joined to the leaves "2".."n"."""
    labels = _numbered(n)
    return Graph(labels, ((labels[0], leaf) for leaf in labels[1:]))
