"""Graph model."""

from collections import deque
from collections.abc import Callable, Iterable, Iterator
from typing import Any, TypeVar

import networkx as nx

from ..errors import UnknownVertexError

VertexLabel = str

T = TypeVar("T")


def validate_label(label: object) -> None:
    if not isinstance(label, str) or not label:
        raise ValueError(f"Vertex labels must be non-empty strings, got {label!r}")
    if not label.isprintable():
        raise ValueError(f"Vertex label is not printable: {label!r}")


class Graph:
    """Immutable finite simple undirected graph with string vertex labels.

    Every transformation returns a new graph; instances are hashable and
    compare by vertex set and edge set.
    """

    __slots__ = ("_adj", "_vertices", "_hash", "_derived")

    def __init__(
        self,
        vertices: Iterable[VertexLabel] = (),
        edges: Iterable[tuple[VertexLabel, VertexLabel]] = (),
    ):
        adj: dict[str, set[str]] = {}
        for v in vertices:
            validate_label(v)
            adj.setdefault(v, set())
        for u, v in edges:
            if u == v:
                raise ValueError(f"Self-loop on {u!r}")
            for w in (u, v):
                if w not in adj:
                    raise UnknownVertexError(w)
            adj[u].add(v)
            adj[v].add(u)
        self._set_adjacency({v: frozenset(nbrs) for v, nbrs in adj.items()})

    def _set_adjacency(self, adj: dict[str, frozenset[str]]) -> None:
        self._adj = adj
        self._vertices = frozenset(adj)
        self._hash: int | None = None
        self._derived: dict[str, Any] = {}

    @classmethod
    def _trusted(cls, adj: dict[str, frozenset[str]]) -> "Graph":
        """Build from an adjacency map already known to be symmetric."""
        graph = cls.__new__(cls)
        graph._set_adjacency(adj)
        return graph

    @classmethod
    def empty(cls) -> "Graph":
        return cls._trusted({})

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        return cls(
            (str(v) for v in nx_graph.nodes),
            ((str(u), str(v)) for u, v in nx_graph.edges),
        )

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def vertices(self) -> frozenset[VertexLabel]:
        return self._vertices

    @property
    def edges(self) -> list[tuple[VertexLabel, VertexLabel]]:
        """Edges as sorted pairs, in sorted order."""
        return sorted(
            (u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v
        )

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def sorted_vertices(self) -> list[VertexLabel]:
        return sorted(self._adj)

    def neighbors(self, v: VertexLabel) -> frozenset[VertexLabel]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def degree(self, v: VertexLabel) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: VertexLabel, v: VertexLabel) -> bool:
        return v in self._adj.get(u, ())

    def require(self, labels: Iterable[VertexLabel]) -> frozenset[VertexLabel]:
        """Return labels as a frozenset, raising on the first unknown one."""
        members = frozenset(labels)
        unknown = sorted(members - self._vertices)
        if unknown:
            raise UnknownVertexError(unknown[0])
        return members

    def is_connected(self) -> bool:
        """Connectivity by BFS; the empty graph counts as disconnected."""
        if not self._adj:
            return False
        start = next(iter(self._adj))
        seen = {start}
        queue = deque([start])
        while queue:
            for w in self._adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self._adj)

    def apex(self) -> VertexLabel | None:
        """Smallest vertex adjacent to every other vertex, if any."""
        n = len(self._adj)
        if n == 0:
            return None
        candidates = [v for v, nbrs in self._adj.items() if len(nbrs) == n - 1]
        return min(candidates) if candidates else None

    def cached(self, name: str, compute: Callable[["Graph"], T]) -> T:
        """Derived value computed at most once per graph instance."""
        if name not in self._derived:
            self._derived[name] = compute(self)
        return self._derived[name]

    # ------------------------------------------------------------------
    # Unchecked constructions (callers validate labels)
    # ------------------------------------------------------------------

    def subgraph(self, keep: frozenset[VertexLabel]) -> "Graph":
        return Graph._trusted({v: self._adj[v] & keep for v in keep})

    def without_vertices(self, drop: Iterable[VertexLabel]) -> "Graph":
        return self.subgraph(self._vertices - frozenset(drop))

    def with_vertex(self, v: VertexLabel, nbrs: frozenset[VertexLabel]) -> "Graph":
        adj = {w: (ws | {v} if w in nbrs else ws) for w, ws in self._adj.items()}
        adj[v] = nbrs
        return Graph._trusted(adj)

    def with_edge(self, u: VertexLabel, v: VertexLabel) -> "Graph":
        adj = dict(self._adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return Graph._trusted(adj)

    def without_edge(self, u: VertexLabel, v: VertexLabel) -> "Graph":
        adj = dict(self._adj)
        adj[u] = adj[u] - {v}
        adj[v] = adj[v] - {u}
        return Graph._trusted(adj)

    def relabel(self, mapping: dict[VertexLabel, VertexLabel]) -> "Graph":
        """Rename vertices; labels missing from mapping are kept."""
        for label in mapping.values():
            validate_label(label)

        def rename(v: VertexLabel) -> VertexLabel:
            return mapping.get(v, v)

        adj = {rename(v): frozenset(map(rename, nbrs)) for v, nbrs in self._adj.items()}
        if len(adj) != len(self._adj):
            raise ValueError("Relabeling merges vertices")
        return Graph._trusted(adj)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.sorted_vertices())
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    # ------------------------------------------------------------------
    # Value semantics
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[VertexLabel]:
        return iter(self.sorted_vertices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={self.sorted_vertices()!r}, edges={self.edges!r})"
