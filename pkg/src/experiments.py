"""Digital models of surfaces at given resolutions, thinned and measured."""

from itertools import combinations

from .config import ExperimentConfig
from .contractibility import DEFAULT_CACHE, ContractibilityCache
from .cubical import intersection_graph, minimal_digital_sphere, voxelize
from .graph_core import is_isomorphic
from .invariants import invariant_summary, invariants_match
from .models import ExperimentComparison, ExperimentReport, ThinningConfig
from .surfaces import create_surface
from .thinning import thin


def run_surface_experiment(
    config: ExperimentConfig,
    thinning_config: ThinningConfig | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
    name: str = "",
    verbose: bool = False,
) -> ExperimentReport:
    """
    Voxelize a surface, build its digital model, thin it and compare invariants.

    Args:
        config: Surface and edge length
        thinning_config: Set-size cap and oracle budget
        cache: Oracle memo
        name: Label for the report, usually the preset name

    Returns:
        Report with invariants before and after thinning and whether the
        skeleton is the minimal digital sphere of the surface's dimension
    """
    model = voxelize(create_surface(config), edge_length=config.edge_length)
    digital = intersection_graph(model)
    report = thin(digital, thinning_config, cache, verbose)
    sphere = minimal_digital_sphere(config.dimension - 1)
    before = invariant_summary(digital)
    after = invariant_summary(report.skeleton)
    return ExperimentReport(
        name=name or f"{config.shape.value}-{config.radius:g}",
        edge_length=config.edge_length,
        cubes=len(model),
        graph_vertices=len(digital),
        graph_edges=digital.edge_count,
        before=before,
        after=after,
        skeleton=report.skeleton,
        stats=report.stats,
        invariants_preserved=invariants_match(before, after),
        skeleton_is_minimal_sphere=is_isomorphic(report.skeleton, sphere),
    )


def compare_experiments(reports: list[ExperimentReport]) -> ExperimentComparison:
    """Check that runs of one surface at several resolutions agree.

    Invariants must match across all runs; skeleton isomorphism is
    reported for every pair.
    """
    if not reports:
        raise ValueError("Nothing to compare")
    first = reports[0]
    return ExperimentComparison(
        invariants_agree=all(invariants_match(first.before, r.before) for r in reports)
        and all(r.invariants_preserved for r in reports),
        skeletons_isomorphic=all(
            is_isomorphic(a.skeleton, b.skeleton) for a, b in combinations(reports, 2)
        ),
        skeleton_sizes=[len(r.skeleton) for r in reports],
    )
