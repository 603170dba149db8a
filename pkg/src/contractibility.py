"""Contractibility oracle and detection of simple points, edges and sets.

A graph is contractible when it can be built from K(1) by repeatedly gluing
a vertex whose rim is a contractible subgraph. The oracle decides this by
backtracking over the last glued vertex: a graph with more than one vertex
is contractible iff some vertex x has a contractible rim and G - x is
contractible.
"""

import threading
from collections.abc import Iterable

from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from .config import DEFAULT_CACHE_MAX_ENTRIES, DEFAULT_ESCALATION_ATTEMPTS, ESCALATION_GROWTH
from .errors import NotAnEdgeError, UndecidedError
from .graph_core import canonical_key, find_isomorphism, joint_rim, neighborhood_union, rim
from .invariants import euler_characteristic
from .models import (
    ContractibilityResult,
    ContractionCertificate,
    Graph,
    GreedyReduction,
    OracleBudget,
    SimpleEdgeScan,
    SimplePointScan,
    SimpleSetCheck,
    SimpleSetScan,
    VertexLabel,
)

DeletionOrder = tuple[VertexLabel, ...]

_MISS = object()

EULER_FILTER_MIN_VERTICES = 6


class ContractibilityCache:
    """Oracle answers memoized by isomorphism class.

    Exact graphs are looked up first. Otherwise every stored graph sharing
    the canonical key is confirmed with an explicit isomorphism, which also
    carries the stored deletion order over to the queried labels. Entries
    are idempotent, so racing duplicate inserts are harmless.

    The memo is emptied once it holds ``max_entries`` graphs. Long-lived
    callers sharing ``DEFAULT_CACHE`` can also call ``clear()`` themselves.
    """

    def __init__(self, max_entries: int = DEFAULT_CACHE_MAX_ENTRIES) -> None:
        if max_entries < 1:
            raise ValueError(f"max_entries must be positive, got {max_entries}")
        self.max_entries = max_entries
        self._lock = threading.Lock()
        self._exact: dict[Graph, DeletionOrder | None] = {}
        self._by_key: dict[tuple, list[tuple[Graph, DeletionOrder | None]]] = {}
        self.hits = 0
        self.misses = 0

    def lookup(self, g: Graph) -> object:
        """Stored deletion order (None when non-contractible) or the miss sentinel."""
        with self._lock:
            if g in self._exact:
                self.hits += 1
                return self._exact[g]
        key = canonical_key(g)
        with self._lock:
            candidates = list(self._by_key.get(key, ()))
        for stored, order in candidates:
            mapping = find_isomorphism(stored, g)
            if mapping is None:
                continue
            translated = None if order is None else tuple(mapping[v] for v in order)
            with self._lock:
                if len(self._exact) < self.max_entries:
                    self._exact[g] = translated
                self.hits += 1
            return translated
        with self._lock:
            self.misses += 1
        return _MISS

    def store(self, g: Graph, order: DeletionOrder | None) -> None:
        key = canonical_key(g)
        with self._lock:
            if g in self._exact:
                return
            if len(self._exact) >= self.max_entries:
                self._exact.clear()
                self._by_key.clear()
            self._exact[g] = order
            self._by_key.setdefault(key, []).append((g, order))

    def clear(self) -> None:
        with self._lock:
            self._exact.clear()
            self._by_key.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        with self._lock:
            return sum(len(entries) for entries in self._by_key.values())


DEFAULT_CACHE = ContractibilityCache()


class _Meter:
    """Recursive-call counter for one top-level query."""

    def __init__(self, budget: OracleBudget | None):
        self.limit = (budget or OracleBudget()).max_recursive_calls
        self.calls = 0

    def charge(self) -> None:
        self.calls += 1
        if self.calls > self.limit:
            raise UndecidedError(self.limit)


def _candidates(g: Graph) -> list[VertexLabel]:
    # small rims first: cheap to certify, prune faster
    return sorted(g.vertices, key=lambda v: (len(g.neighbors(v)), v))


def _decide(
    g: Graph, meter: _Meter, cache: ContractibilityCache | None
) -> DeletionOrder | None:
    """Deletion order reducing ``g`` to K1, or None if ``g`` is not contractible."""
    meter.charge()
    n = len(g)
    if n == 0:
        return None
    if n == 1:
        return ()
    # gluing never disconnects
    if not g.is_connected():
        return None
    apex = g.apex()
    if apex is not None:
        # every other vertex of a cone has a cone as rim
        return tuple(v for v in g.sorted_vertices() if v != apex)
    # gluing along a contractible rim keeps the Euler characteristic at 1
    if n >= EULER_FILTER_MIN_VERTICES and euler_characteristic(g) != 1:
        return None

    if cache is not None:
        hit = cache.lookup(g)
        if hit is not _MISS:
            return hit  # type: ignore[return-value]

    order = None
    for x in _candidates(g):
        if _decide(g.subgraph(g.neighbors(x)), meter, cache) is None:
            continue
        rest = _decide(g.without_vertices((x,)), meter, cache)
        if rest is not None:
            order = (x, *rest)
            break

    if cache is not None:
        cache.store(g, order)
    return order


def _run(
    g: Graph, budget: OracleBudget | None, cache: ContractibilityCache | None
) -> DeletionOrder | None:
    meter = _Meter(budget)
    try:
        return _decide(g, meter, cache)
    except RecursionError as e:
        # one stack frame per deleted vertex
        raise UndecidedError(
            meter.limit,
            f"Oracle recursion depth exhausted after {meter.calls} recursive calls",
        ) from e


def _contractible(
    g: Graph, budget: OracleBudget | None, cache: ContractibilityCache | None
) -> bool:
    return _run(g, budget, cache) is not None


# =============================================================================
# Contractibility
# =============================================================================


def is_contractible(
    g: Graph,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> ContractibilityResult:
    """
    Decide contractibility exactly.

    Args:
        g: Graph to decide; the empty graph is allowed and never contractible
        budget: Cap on recursive calls for this query
        cache: Shared memo, or None to disable memoization

    Returns:
        The answer, with a deletion certificate when contractible

    Raises:
        UndecidedError: If the budget or the recursion depth is exhausted
    """
    order = _run(g, budget, cache)
    if order is None:
        return ContractibilityResult(contractible=False)
    return ContractibilityResult(
        contractible=True, certificate=ContractionCertificate(order)
    )


def is_contractible_escalating(
    g: Graph,
    budget: OracleBudget | None = None,
    attempts: int = DEFAULT_ESCALATION_ATTEMPTS,
    growth: int = ESCALATION_GROWTH,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> ContractibilityResult:
    """Retry undecided queries with the budget multiplied by ``growth`` each time."""
    base = budget or OracleBudget()
    for attempt in Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_exception_type(UndecidedError),
        reraise=True,
    ):
        with attempt:
            factor = growth ** (attempt.retry_state.attempt_number - 1)
            return is_contractible(g, base.scaled(factor), cache)
    raise UndecidedError(base.max_recursive_calls)


def verify_certificate(
    g: Graph,
    certificate: ContractionCertificate,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> bool:
    """Replay a deletion order, re-checking every rim, and require K1 at the end."""
    order = certificate.deletion_order
    if len(order) != len(g) - 1 or len(set(order)) != len(order):
        return False
    current = g
    for v in order:
        if v not in current:
            return False
        if not _contractible(rim(current, v), budget, cache):
            return False
        current = current.without_vertices((v,))
    return len(current) == 1


# =============================================================================
# Simple points, edges and sets
# =============================================================================


def is_simple_point(
    g: Graph,
    v: VertexLabel,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> bool:
    """Whether the rim of ``v`` is contractible."""
    return _contractible(rim(g, v), budget, cache)


def is_simple_edge(
    g: Graph,
    u: VertexLabel,
    v: VertexLabel,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> bool:
    """Whether the joint rim O(u) ∩ O(v) of the edge (u, v) is contractible."""
    g.require((u, v))
    if not g.has_edge(u, v):
        raise NotAnEdgeError(u, v)
    return _contractible(joint_rim(g, u, v), budget, cache)


def check_simple_set(
    g: Graph,
    labels: Iterable[VertexLabel],
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> SimpleSetCheck:
    """Check both requirements of a simple set, the set itself first."""
    members = g.require(labels)
    if not members:
        raise ValueError("Simple set check of an empty set")
    if not _contractible(g.subgraph(members), budget, cache):
        return SimpleSetCheck.SET_NOT_CONTRACTIBLE
    if not _contractible(neighborhood_union(g, members), budget, cache):
        return SimpleSetCheck.UNION_NOT_CONTRACTIBLE
    return SimpleSetCheck.SIMPLE


def is_simple_set(
    g: Graph,
    labels: Iterable[VertexLabel],
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> bool:
    """Whether S and its neighborhood union U(S) are both contractible."""
    return check_simple_set(g, labels, budget, cache) == SimpleSetCheck.SIMPLE


def enumerate_simple_points(
    g: Graph,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> SimplePointScan:
    """All simple points in label order; budget-exhausted vertices reported apart."""
    scan = SimplePointScan()
    for v in g.sorted_vertices():
        try:
            if is_simple_point(g, v, budget, cache):
                scan.simple.append(v)
        except UndecidedError:
            scan.undecided.append(v)
    return scan


def enumerate_simple_edges(
    g: Graph,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> SimpleEdgeScan:
    """All simple edges in sorted order."""
    scan = SimpleEdgeScan()
    for u, v in g.edges:
        try:
            if is_simple_edge(g, u, v, budget, cache):
                scan.simple.append((u, v))
        except UndecidedError:
            scan.undecided.append((u, v))
    return scan


def connected_vertex_sets(
    g: Graph, min_size: int, max_size: int
) -> list[tuple[VertexLabel, ...]]:
    """Vertex sets inducing connected subgraphs, ordered by size then labels.

    Grown level by level: every connected set of size k + 1 extends a
    connected set of size k by one neighbor.
    """
    found: set[frozenset[VertexLabel]] = set()
    frontier = {frozenset([v]) for v in g.vertices}
    size = 1
    while frontier and size <= max_size:
        if size >= min_size:
            found |= frontier
        if size == max_size:
            break
        frontier = {
            members | {w}
            for members in frontier
            for v in members
            for w in g.neighbors(v)
            if w not in members
        }
        size += 1
    return sorted((tuple(sorted(s)) for s in found), key=lambda t: (len(t), t))


def enumerate_simple_sets(
    g: Graph,
    min_size: int,
    max_size: int,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> SimpleSetScan:
    """
    All simple sets with size in [min_size, max_size].

    Only connected candidates are tested: a set inducing a disconnected
    subgraph is never contractible.

    Raises:
        ValueError: Unless 1 <= min_size <= max_size <= |G|
    """
    if not 1 <= min_size <= max_size <= len(g):
        raise ValueError(
            f"Need 1 <= min_size <= max_size <= {len(g)}, got {min_size}..{max_size}"
        )
    scan = SimpleSetScan()
    for members in connected_vertex_sets(g, min_size, max_size):
        try:
            if is_simple_set(g, members, budget, cache):
                scan.simple.append(members)
        except UndecidedError:
            scan.undecided.append(members)
    return scan


def greedy_reduce(
    g: Graph,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> GreedyReduction:
    """
    Delete the smallest simple point until none is left.

    A fast heuristic, not the ground truth: the oracle backtracks, this
    never does. An undecided check stops the run and flags the result.
    """
    current = g
    deletions: list[VertexLabel] = []
    while True:
        chosen = None
        for v in current.sorted_vertices():
            try:
                simple = is_simple_point(current, v, budget, cache)
            except UndecidedError:
                return GreedyReduction(current, deletions, undecided=True)
            if simple:
                chosen = v
                break
        if chosen is None:
            return GreedyReduction(current, deletions)
        deletions.append(chosen)
        current = current.without_vertices((chosen,))
