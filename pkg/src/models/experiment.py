"""Surface experiment models."""

from dataclasses import dataclass

from .complex import InvariantSummary
from .graph import Graph
from .thinning import ThinningStats


@dataclass
class ExperimentReport:
    """One voxelize, build graph, thin and measure run."""

    name: str
    edge_length: float
    cubes: int
    graph_vertices: int
    graph_edges: int
    before: InvariantSummary
    after: InvariantSummary
    skeleton: Graph
    stats: ThinningStats
    invariants_preserved: bool
    skeleton_is_minimal_sphere: bool


@dataclass
class ExperimentComparison:
    """Agreement across resolutions of the same surface."""

    invariants_agree: bool
    skeletons_isomorphic: bool
    skeleton_sizes: list[int]
