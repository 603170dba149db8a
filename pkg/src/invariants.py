"""Clique-complex Euler characteristic and Betti numbers over GF(2).

Contractible transformations keep both unchanged, so they certify that a
thinning run did not alter the topology of the digital space.
"""

from collections.abc import Iterable

import networkx as nx

from .models import BettiVector, CliqueComplex, Graph, InvariantSummary


def clique_complex(g: Graph, max_dim: int) -> CliqueComplex:
    """All cliques with at most ``max_dim + 1`` vertices, sorted per dimension."""
    if max_dim < 0:
        raise ValueError(f"max_dim must be non-negative, got {max_dim}")
    by_dim: list[list[tuple[str, ...]]] = [[] for _ in range(max_dim + 1)]
    # yielded in order of increasing size
    for clique in nx.enumerate_all_cliques(g.to_networkx()):
        if len(clique) > max_dim + 1:
            break
        by_dim[len(clique) - 1].append(tuple(sorted(clique)))
    return CliqueComplex(
        cliques_by_dim=tuple(tuple(sorted(cliques)) for cliques in by_dim),
        max_dim=max_dim,
    )


def clique_number(g: Graph) -> int:
    """Size of a largest clique (0 for the empty graph)."""
    return max((len(c) for c in nx.find_cliques(g.to_networkx())), default=0)


def euler_characteristic(g: Graph) -> int:
    """Alternating sum of clique counts over the full clique complex."""
    return clique_complex(g, max(clique_number(g) - 1, 0)).euler_characteristic()


def gf2_rank(columns: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as one bitmask per column.

    Each column is reduced against the pivots found so far (keyed by the
    highest set bit); a non-zero remainder becomes a new pivot.
    """
    pivots: dict[int, int] = {}
    for column in columns:
        while column:
            top = column.bit_length() - 1
            if top not in pivots:
                pivots[top] = column
                break
            column ^= pivots[top]
    return len(pivots)


def _boundary_columns(
    faces: tuple[tuple[str, ...], ...], simplices: tuple[tuple[str, ...], ...]
) -> list[int]:
    row_of = {face: i for i, face in enumerate(faces)}
    columns = []
    for simplex in simplices:
        mask = 0
        for i in range(len(simplex)):
            mask |= 1 << row_of[simplex[:i] + simplex[i + 1 :]]
        columns.append(mask)
    return columns


def _betti_from_complex(cx: CliqueComplex, max_dim: int) -> BettiVector:
    # needs cliques up to dimension max_dim + 1 for the last boundary rank
    dims = cx.cliques_by_dim
    ranks = [0] * (max_dim + 2)
    for k in range(1, max_dim + 2):
        if k < len(dims) and dims[k]:
            ranks[k] = gf2_rank(_boundary_columns(dims[k - 1], dims[k]))
    return BettiVector(
        tuple(len(dims[k]) - ranks[k] - ranks[k + 1] for k in range(max_dim + 1))
    )


def betti_numbers(g: Graph, max_dim: int) -> BettiVector:
    """Betti numbers b_0..b_max_dim: b_k = dim ker ∂_k - rank ∂_{k+1}."""
    if max_dim < 0:
        raise ValueError(f"max_dim must be non-negative, got {max_dim}")
    return _betti_from_complex(clique_complex(g, max_dim + 1), max_dim)


def invariant_summary(g: Graph) -> InvariantSummary:
    """Euler characteristic, Betti vector and clique counts of the full complex."""
    top = clique_number(g)
    cx = clique_complex(g, max(top, 1))
    betti = _betti_from_complex(cx, max(top - 1, 0))
    return InvariantSummary(
        euler=cx.euler_characteristic(),
        betti=betti,
        clique_counts=tuple(cx.counts[:top]),
    )


def invariants_match(before: InvariantSummary, after: InvariantSummary) -> bool:
    """Equal Euler characteristic and equal Betti numbers up to trailing zeros."""
    return before.euler == after.euler and before.betti.trimmed() == after.betti.trimmed()
