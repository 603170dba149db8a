"""Thinning of a digital space to a homotopy-equivalent skeleton.

Phase 1 deletes the smallest simple point until none is left. Phase 2
contracts the first simple set found and hands control back to phase 1.
The run stops when neither phase can act.
"""

import sys

from .contractibility import (
    DEFAULT_CACHE,
    ContractibilityCache,
    connected_vertex_sets,
    is_simple_point,
    is_simple_set,
)
from .errors import UndecidedError
from .graph_core import external_neighborhood, neighborhood_union
from .models import (
    Graph,
    OracleBudget,
    ThinningConfig,
    ThinningReport,
    ThinningStats,
    Transformation,
    TransformKind,
    VertexLabel,
)
from .transforms import apply_step, fresh_label, start_trace


class _PointScanner:
    """Simple-point status per vertex, invalidated wherever a rim changes."""

    def __init__(self, budget: OracleBudget, cache: ContractibilityCache | None):
        self._budget = budget
        self._cache = cache
        self._status: dict[VertexLabel, bool | None] = {}

    def invalidate(self, labels: frozenset[VertexLabel] | tuple[VertexLabel, ...]) -> None:
        for label in labels:
            self._status.pop(label, None)

    def status(self, g: Graph, v: VertexLabel) -> bool | None:
        """True/False when decided, None when the budget ran out."""
        if v not in self._status:
            try:
                self._status[v] = is_simple_point(g, v, self._budget, self._cache)
            except UndecidedError:
                self._status[v] = None
        return self._status[v]

    def first_simple(self, g: Graph, skipped: set[frozenset[VertexLabel]]) -> VertexLabel | None:
        for v in g.sorted_vertices():
            simple = self.status(g, v)
            if simple is None:
                skipped.add(frozenset([v]))
            elif simple:
                return v
        return None


def _first_simple_set(
    g: Graph,
    cfg: ThinningConfig,
    cache: ContractibilityCache | None,
    skipped: set[frozenset[VertexLabel]],
    undecided: dict[frozenset[VertexLabel], Graph],
) -> tuple[VertexLabel, ...] | None:
    # largest sets first: they shrink the graph fastest
    for size in range(min(cfg.max_set_size, len(g)), 1, -1):
        for members in connected_vertex_sets(g, size, size):
            key = frozenset(members)
            # the answer depends only on U(S), which contains S
            union = neighborhood_union(g, members)
            if undecided.get(key) == union:
                skipped.add(key)
                continue
            try:
                if is_simple_set(g, members, cfg.budget, cache):
                    return members
            except UndecidedError:
                skipped.add(key)
                undecided[key] = union
    return None


def thin(
    g: Graph,
    cfg: ThinningConfig | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
    verbose: bool = False,
) -> ThinningReport:
    """
    Thin a graph to a skeleton with no simple point and no small simple set.

    Args:
        g: Digital space to thin
        cfg: Set-size cap and oracle budget
        cache: Oracle memo shared across the run
        verbose: Print one progress line per step to standard error

    Returns:
        Skeleton, the trace leading to it and run statistics. Candidates
        whose check ran out of budget are skipped and counted.
    """
    cfg = cfg or ThinningConfig()
    used = set(g.vertices)
    skipped: set[frozenset[VertexLabel]] = set()
    scanner = _PointScanner(cfg.budget, cache)
    undecided_sets: dict[frozenset[VertexLabel], Graph] = {}
    trace = start_trace(g)
    current = g

    while True:
        while (v := scanner.first_simple(current, skipped)) is not None:
            nbrs = current.neighbors(v)
            step = Transformation.delete_point(v)
            current = apply_step(current, step, verify=False)
            trace = trace.append(step)
            scanner.invalidate((v,))
            scanner.invalidate(nbrs)
            if verbose:
                print(f"Deleted simple point {v} ({len(current)} left)", file=sys.stderr)

        members = _first_simple_set(current, cfg, cache, skipped, undecided_sets)
        if members is None:
            break
        z = fresh_label(current, used)
        used.add(z)
        outside = external_neighborhood(current, members)
        step = Transformation.contract_set(set(members), z)
        current = apply_step(current, step, verify=False)
        trace = trace.append(step)
        scanner.invalidate(members)
        scanner.invalidate(outside)
        if verbose:
            print(
                f"Contracted {list(members)} to {z} ({len(current)} left)", file=sys.stderr
            )

    stats = ThinningStats(
        points_deleted=trace.count(TransformKind.DELETE_POINT),
        sets_contracted=trace.count(TransformKind.CONTRACT_SET),
        undecided_candidates_skipped=len(skipped),
    )
    if skipped:
        print(
            f"Warning: skipped {len(skipped)} undecided candidates; "
            "the skeleton may not be a true fixpoint",
            file=sys.stderr,
        )
    return ThinningReport(
        skeleton=current, trace=trace, stats=stats, max_set_size=cfg.max_set_size
    )


def is_skeleton(
    g: Graph,
    cfg: ThinningConfig | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> bool:
    """
    Whether ``g`` has no simple point and no simple set of size 2..max_set_size.

    Raises:
        UndecidedError: If no simple point or set was found but some
            candidate could not be decided
    """
    cfg = cfg or ThinningConfig()
    skipped: set[frozenset[VertexLabel]] = set()
    if _PointScanner(cfg.budget, cache).first_simple(g, skipped) is not None:
        return False
    if _first_simple_set(g, cfg, cache, skipped, {}) is not None:
        return False
    if skipped:
        raise UndecidedError(cfg.budget.max_recursive_calls)
    return True
