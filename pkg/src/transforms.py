"""Contractible transformations with replayable, verifiable traces.

Every public operation verifies its own precondition. Replay may skip
verification only when the caller explicitly lowers the ``verify`` flag
for a trace that was already verified.
"""

from collections.abc import Callable
from typing import TypeVar

from .codec import graph_digest
from .contractibility import (
    DEFAULT_CACHE,
    ContractibilityCache,
    check_simple_set,
    is_contractible,
    is_simple_point,
)
from .errors import (
    InternalConsistencyError,
    LabelCollisionError,
    NotAnEdgeError,
    TraceReplayError,
    TransformRejected,
    UndecidedError,
)
from .graph_core import external_neighborhood, joint_rim, neighborhood_union, rim
from .models import (
    Graph,
    OracleBudget,
    SimpleSetCheck,
    Trace,
    Transformation,
    TransformKind,
    VertexLabel,
    validate_label,
)

T = TypeVar("T")

Cache = ContractibilityCache | None


def _decided(check: Callable[[], T], what: str) -> T:
    try:
        return check()
    except UndecidedError as e:
        raise TransformRejected(f"{what} undecided ({e})", undecided=True) from e


def fresh_label(g: Graph, avoid: frozenset[str] | set[str] = frozenset(), prefix: str = "z") -> str:
    """Smallest ``z<k>`` label in neither ``g`` nor ``avoid``."""
    k = 0
    while f"{prefix}{k}" in g or f"{prefix}{k}" in avoid:
        k += 1
    return f"{prefix}{k}"


def start_trace(g: Graph) -> Trace:
    return Trace(initial_digest=graph_digest(g))


# =============================================================================
# Points
# =============================================================================


def delete_simple_point(
    g: Graph, v: VertexLabel, budget: OracleBudget | None = None, cache: Cache = DEFAULT_CACHE
) -> Graph:
    """Delete ``v`` after verifying that its rim is contractible."""
    the_rim = rim(g, v)
    if not _decided(lambda: is_simple_point(g, v, budget, cache), f"simplicity of {v!r}"):
        raise TransformRejected(
            f"{v!r} is not a simple point; rim {the_rim.sorted_vertices()}"
        )
    return g.without_vertices((v,))


def glue_point(
    g: Graph,
    rim_set: frozenset[VertexLabel] | set[VertexLabel],
    new_label: VertexLabel,
    budget: OracleBudget | None = None,
    cache: Cache = DEFAULT_CACHE,
) -> Graph:
    """Attach a new vertex adjacent exactly to ``rim_set``, which must be contractible."""
    members = g.require(rim_set)
    validate_label(new_label)
    if new_label in g:
        raise LabelCollisionError([new_label])
    contractible = _decided(
        lambda: is_contractible(g.subgraph(members), budget, cache).contractible,
        f"contractibility of rim {sorted(members)}",
    )
    if not contractible:
        raise TransformRejected(f"rim {sorted(members)} is not contractible")
    return g.with_vertex(new_label, members)


# =============================================================================
# Edges
# =============================================================================


def _edge_endpoints(g: Graph, u: VertexLabel, v: VertexLabel) -> None:
    g.require((u, v))
    if u == v:
        raise ValueError(f"An edge needs two distinct vertices, got {u!r} twice")


def _require_contractible_joint_rim(
    g: Graph, u: VertexLabel, v: VertexLabel, budget: OracleBudget | None, cache: Cache
) -> None:
    shared = joint_rim(g, u, v)
    contractible = _decided(
        lambda: is_contractible(shared, budget, cache).contractible,
        f"joint rim of ({u!r}, {v!r})",
    )
    if not contractible:
        raise TransformRejected(
            f"joint rim {shared.sorted_vertices()} of ({u!r}, {v!r}) is not contractible"
        )


def delete_simple_edge(
    g: Graph,
    u: VertexLabel,
    v: VertexLabel,
    budget: OracleBudget | None = None,
    cache: Cache = DEFAULT_CACHE,
) -> Graph:
    """Remove the edge (u, v) after verifying it is simple."""
    _edge_endpoints(g, u, v)
    if not g.has_edge(u, v):
        raise NotAnEdgeError(u, v)
    _require_contractible_joint_rim(g, u, v, budget, cache)
    return g.without_edge(u, v)


def glue_simple_edge(
    g: Graph,
    u: VertexLabel,
    v: VertexLabel,
    budget: OracleBudget | None = None,
    cache: Cache = DEFAULT_CACHE,
) -> Graph:
    """Add the edge (u, v); the common neighbors must induce a contractible graph."""
    _edge_endpoints(g, u, v)
    if g.has_edge(u, v):
        raise TransformRejected(f"({u!r}, {v!r}) is already an edge")
    _require_contractible_joint_rim(g, u, v, budget, cache)
    return g.with_edge(u, v)


# =============================================================================
# Simple sets
# =============================================================================


def _contract(g: Graph, members: frozenset[VertexLabel], z: VertexLabel) -> Graph:
    return g.without_vertices(members).with_vertex(z, external_neighborhood(g, members))


def _require_simple_set(
    g: Graph,
    labels: frozenset[VertexLabel] | set[VertexLabel],
    z_label: VertexLabel | None,
    budget: OracleBudget | None,
    cache: Cache,
) -> tuple[frozenset[VertexLabel], VertexLabel]:
    members = g.require(labels)
    if not members:
        raise ValueError("Cannot contract an empty set")
    z = z_label if z_label is not None else fresh_label(g)
    validate_label(z)
    if z in g:
        raise LabelCollisionError([z])
    check = _decided(
        lambda: check_simple_set(g, members, budget, cache), f"simplicity of {sorted(members)}"
    )
    if check == SimpleSetCheck.SET_NOT_CONTRACTIBLE:
        raise TransformRejected(f"set {sorted(members)} is not contractible")
    if check == SimpleSetCheck.UNION_NOT_CONTRACTIBLE:
        raise TransformRejected(
            f"neighborhood union of {sorted(members)} is not contractible"
        )
    return members, z


def contract_simple_set(
    g: Graph,
    labels: frozenset[VertexLabel] | set[VertexLabel],
    z_label: VertexLabel | None = None,
    budget: OracleBudget | None = None,
    cache: Cache = DEFAULT_CACHE,
) -> Graph:
    """
    Replace a simple set S by one vertex z adjacent to the external neighborhood of S.

    Args:
        g: Graph containing S
        labels: Members of S
        z_label: Fresh label for z; the smallest free ``z<k>`` when omitted

    Returns:
        (G - S) ∪ {z}

    Raises:
        TransformRejected: If S or U(S) is not contractible, saying which
    """
    members, z = _require_simple_set(g, labels, z_label, budget, cache)
    return _contract(g, members, z)


def contract_via_glue_then_delete(
    g: Graph,
    labels: frozenset[VertexLabel] | set[VertexLabel],
    z_label: VertexLabel | None = None,
    budget: OracleBudget | None = None,
    cache: Cache = DEFAULT_CACHE,
) -> Graph:
    """Contract S by gluing z with rim U(S), then deleting the members of S one by one.

    Each member is simple when deleted because its rim is a cone with apex
    z, so any failure here is an implementation bug.
    """
    members, z = _require_simple_set(g, labels, z_label, budget, cache)
    union = neighborhood_union(g, members).vertices
    try:
        current = glue_point(g, union, z, budget, cache)
        for v in sorted(members):
            current = delete_simple_point(current, v, budget, cache)
    except TransformRejected as e:
        if e.undecided:
            raise
        raise InternalConsistencyError(f"Glue-then-delete contraction failed: {e}") from e
    return current


# =============================================================================
# Traces
# =============================================================================


def _apply_unchecked(g: Graph, step: Transformation) -> Graph:
    if step.kind == TransformKind.DELETE_POINT:
        return g.without_vertices(g.require((step.vertex,)))
    if step.kind == TransformKind.GLUE_POINT:
        if step.vertex in g:
            raise LabelCollisionError([step.vertex])
        return g.with_vertex(step.vertex, g.require(step.rim))
    u, v = step.edge or ("", "")
    if step.kind == TransformKind.DELETE_EDGE:
        if not g.has_edge(u, v):
            raise NotAnEdgeError(u, v)
        return g.without_edge(u, v)
    if step.kind == TransformKind.GLUE_EDGE:
        _edge_endpoints(g, u, v)
        return g.with_edge(u, v)
    members = g.require(step.members)
    if step.z in g:
        raise LabelCollisionError([step.z])
    return _contract(g, members, step.z)


def apply_step(
    g: Graph,
    step: Transformation,
    budget: OracleBudget | None = None,
    cache: Cache = DEFAULT_CACHE,
    verify: bool = True,
) -> Graph:
    """Apply one recorded transformation, verifying its precondition unless told not to."""
    if not verify:
        return _apply_unchecked(g, step)
    if step.kind == TransformKind.DELETE_POINT:
        return delete_simple_point(g, step.vertex, budget, cache)
    if step.kind == TransformKind.GLUE_POINT:
        return glue_point(g, set(step.rim), step.vertex, budget, cache)
    u, v = step.edge or ("", "")
    if step.kind == TransformKind.DELETE_EDGE:
        return delete_simple_edge(g, u, v, budget, cache)
    if step.kind == TransformKind.GLUE_EDGE:
        return glue_simple_edge(g, u, v, budget, cache)
    return contract_simple_set(g, set(step.members), step.z, budget, cache)


def replay(
    trace: Trace,
    g0: Graph,
    budget: OracleBudget | None = None,
    cache: Cache = DEFAULT_CACHE,
    verify: bool = True,
) -> Graph:
    """
    Replay a trace from its initial graph.

    Raises:
        TraceReplayError: On a digest mismatch (step index -1) or at the
            first step whose precondition fails
    """
    if graph_digest(g0) != trace.initial_digest:
        raise TraceReplayError(-1, "graph digest does not match the trace")
    current = g0
    for index, step in enumerate(trace.steps):
        try:
            current = apply_step(current, step, budget, cache, verify)
        except ValueError as e:
            raise TraceReplayError(index, str(e)) from e
    return current


def _invert(step: Transformation, before: Graph) -> list[Transformation]:
    if step.kind == TransformKind.DELETE_POINT:
        return [Transformation.glue_point(step.vertex, before.neighbors(step.vertex))]
    if step.kind == TransformKind.GLUE_POINT:
        return [Transformation.delete_point(step.vertex)]
    u, v = step.edge or ("", "")
    if step.kind == TransformKind.DELETE_EDGE:
        return [Transformation.glue_edge(u, v)]
    if step.kind == TransformKind.GLUE_EDGE:
        return [Transformation.delete_edge(u, v)]
    # contraction = glue z with rim U(S), then delete the members in order;
    # undo by gluing the members back (their rims are cones over z), then deleting z
    members = list(step.members)
    inverse = []
    for i in range(len(members) - 1, -1, -1):
        earlier = set(members[:i])
        rim_set = (before.neighbors(members[i]) - earlier) | {step.z}
        inverse.append(Transformation.glue_point(members[i], rim_set))
    inverse.append(Transformation.delete_point(step.z))
    return inverse


def inverse_trace(trace: Trace, g0: Graph) -> Trace:
    """Trace leading from the end of ``trace`` back to ``g0``.

    Contraction has no primitive inverse; it is expanded into point gluings
    and one deletion.
    """
    if graph_digest(g0) != trace.initial_digest:
        raise TraceReplayError(-1, "graph digest does not match the trace")
    states = [g0]
    for step in trace.steps:
        states.append(_apply_unchecked(states[-1], step))
    steps: list[Transformation] = []
    for step, before in zip(reversed(trace.steps), reversed(states[:-1])):
        steps.extend(_invert(step, before))
    return Trace(initial_digest=graph_digest(states[-1]), steps=tuple(steps))
