"""Cubical and digital models of surfaces.

Space is divided into closed cubes of edge L anchored at the origin. The
cubical model of a surface is the set of cubes meeting it, and the digital
model is the intersection graph of those cubes.
"""

import sys
from collections.abc import Sequence
from itertools import product

import numpy as np

from .graph_core import join
from .models import CubicalModel, Graph, VertexLabel
from .surfaces import ImplicitSurface

Bounds = tuple[Sequence[float], Sequence[float]]


def default_bounds(surface: ImplicitSurface, edge_length: float) -> tuple[np.ndarray, np.ndarray]:
    """Bounding box of the surface grown by two cubes on every side."""
    lo, hi = surface.bounding_box()
    return lo - 2 * edge_length, hi + 2 * edge_length


def voxelize(
    surface: ImplicitSurface, bounds: Bounds | None = None, edge_length: float = 1.0
) -> CubicalModel:
    """
    Collect every grid cube inside ``bounds`` whose closed box meets the surface.

    Args:
        surface: Zero set to cover
        bounds: Low and high corners of the search box; grown from the
            surface's bounding box when omitted
        edge_length: Cube edge L

    Returns:
        The cubical model. A warning goes to standard error when a cube lies
        on the border of the index range, which means the bounds may clip
        the zero set.
    """
    if edge_length <= 0:
        raise ValueError(f"Edge length must be positive, got {edge_length}")
    lo, hi = bounds if bounds is not None else default_bounds(surface, edge_length)
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if lo.shape != (surface.dimension,) or hi.shape != (surface.dimension,):
        raise ValueError(f"Bounds must be two {surface.dimension}D corners")
    if np.any(hi <= lo):
        raise ValueError("Bounds must have positive extent on every axis")

    first = np.floor(lo / edge_length).astype(int)
    last = np.ceil(hi / edge_length).astype(int) - 1
    axes = [np.arange(a, b + 1) for a, b in zip(first, last)]
    index = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
    corner_lo = index * edge_length
    inside = surface.intersects(corner_lo, corner_lo + edge_length)
    hits = index[inside]

    if len(hits) and (np.any(hits == first) or np.any(hits == last)):
        print(
            "Warning: cubical model touches the bounds; the surface may be clipped",
            file=sys.stderr,
        )
    cubes = frozenset(tuple(int(i) for i in row) for row in hits)
    return CubicalModel(n=surface.dimension, edge_length=float(edge_length), cubes=cubes)


def cube_label(index: Sequence[int]) -> VertexLabel:
    """Canonical vertex label of a cube, e.g. ``(-1,0)``."""
    return "(" + ",".join(str(int(i)) for i in index) + ")"


def intersection_graph(model: CubicalModel) -> Graph:
    """One vertex per cube; two closed cubes meet iff their indices are at Chebyshev distance 1."""
    offsets = [d for d in product((-1, 0, 1), repeat=model.n) if any(d)]
    edges = []
    for index in model.cubes:
        for d in offsets:
            other = tuple(i + k for i, k in zip(index, d))
            if other in model.cubes and other > index:
                edges.append((cube_label(index), cube_label(other)))
    return Graph((cube_label(index) for index in model.cubes), edges)


def minimal_digital_sphere(n: int) -> Graph:
    """Join of n + 1 copies of S0, labelled ``+k``/``-k``: C4 for n=1, the octahedron for n=2."""
    if n < 0:
        raise ValueError(f"Sphere dimension must be non-negative, got {n}")
    sphere = Graph(["+0", "-0"])
    for k in range(1, n + 1):
        sphere = join(sphere, Graph([f"+{k}", f"-{k}"]))
    return sphere
