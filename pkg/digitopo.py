#!/usr/bin/env python3
"""
Digital topology toolkit

Decides contractibility of graphs, finds simple points, edges and sets,
thins digital spaces to skeletons with replayable traces, and builds digital
models of circles, spheres and tori.
"""

import argparse
import sys

from src.census import connected_atlas_graphs, contractible_census, greedy_oracle_findings
from src.codec import (
    census_to_dict,
    certificate_to_dict,
    comparison_to_dict,
    experiment_to_dict,
    graph_digest,
    graph_to_dict,
    graph_to_dot,
    invariants_to_dict,
    model_to_dict,
    report_to_dict,
    trace_to_dict,
    write_json,
    write_text,
)
from src.config import (
    DEFAULT_BUDGET,
    DEFAULT_ESCALATION_ATTEMPTS,
    DEFAULT_MAX_SET_SIZE,
    EXHAUSTIVE_MAX_VERTICES,
    EXPERIMENT_PRESETS,
    DEFAULT_PRESET,
    ExperimentConfig,
    Shape,
    get_available_presets,
)
from src.contractibility import (
    enumerate_simple_edges,
    enumerate_simple_points,
    enumerate_simple_sets,
    is_contractible_escalating,
)
from src.cubical import intersection_graph, minimal_digital_sphere, voxelize
from src.errors import InternalConsistencyError, TraceReplayError, TransformRejected, UndecidedError
from src.experiments import compare_experiments, run_surface_experiment
from src.graph_core import complete_graph, cycle_graph, path_graph, star_graph
from src.invariants import betti_numbers, clique_complex, euler_characteristic, invariant_summary
from src.models import OracleBudget, ThinningConfig
from src.parser import read_graph, read_trace
from src.surfaces import create_surface
from src.thinning import thin
from src.transforms import replay

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_INPUT = 3
EXIT_INTERNAL = 4

FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
    "sphere": minimal_digital_sphere,
}


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with the input-error exit code."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return number


def float_tuple(value: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in value.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {value!r}") from e


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = ArgumentParser(
        prog="digitopo",
        description="Contractible transformations and thinning of digital spaces",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  digitopo generate --family cycle --n 6 | digitopo thin
  digitopo check --input graph.json
  digitopo sphere --n 2 | digitopo invariants
  digitopo cubify --n 2 --radius 1.5 --emit graph | digitopo thin --skeleton-only
  digitopo verify-trace --trace report.json --input graph.json

Exit codes:
  0  success or positive answer
  1  negative answer (check, verify-trace)
  2  undecided: oracle budget exhausted
  3  input or usage error
  4  internal consistency failure
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument("--input", "-i", type=str, help="Graph JSON or DOT (default: stdin)")
        p.add_argument("--output", "-o", type=str, help="Output file (default: stdout)")

    def oracle(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--budget",
            type=positive_int,
            default=DEFAULT_BUDGET,
            help=f"Recursive-call cap per oracle query (default: {DEFAULT_BUDGET})",
        )

    def set_size(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-set-size",
            type=int,
            default=DEFAULT_MAX_SET_SIZE,
            help=f"Largest simple set searched (default: {DEFAULT_MAX_SET_SIZE})",
        )

    p = sub.add_parser("check", help="Decide contractibility and emit a certificate")
    io(p)
    oracle(p)
    p.add_argument(
        "--attempts",
        type=positive_int,
        default=DEFAULT_ESCALATION_ATTEMPTS,
        help="Retries with a tenfold budget when undecided (default: 1)",
    )

    p = sub.add_parser("simple", help="List simple points, edges and sets")
    io(p)
    oracle(p)
    set_size(p)

    p = sub.add_parser("thin", help="Thin a graph to a skeleton")
    io(p)
    oracle(p)
    set_size(p)
    p.add_argument("--skeleton-only", action="store_true", help="Emit only the skeleton graph")
    p.add_argument("--trace-output", type=str, help="Also write the trace to this file")
    p.add_argument("--verbose", "-v", action="store_true", help="Print progress to stderr")

    p = sub.add_parser("invariants", help="Euler characteristic, Betti numbers, clique counts")
    io(p)
    p.add_argument("--max-dim", type=int, help="Cap the complex at this dimension")

    p = sub.add_parser("cubify", help="Voxelize a circle, sphere or torus")
    io(p, needs_input=False)
    p.add_argument("--preset", choices=get_available_presets(), help="Named experiment setup")
    p.add_argument("--shape", choices=[s.value for s in Shape], help="Surface family")
    p.add_argument("--n", type=int, choices=(2, 3), help="Dimension: 2 = circle, 3 = sphere")
    p.add_argument("--radius", type=float, help="Radius (major radius for a torus)")
    p.add_argument("--minor-radius", type=float, default=0.0, help="Torus tube radius")
    p.add_argument("--edge-length", type=float, default=1.0, help="Cube edge L (default: 1)")
    p.add_argument("--center", type=float_tuple, help="Center as comma-separated coordinates")
    p.add_argument(
        "--emit",
        choices=("model", "graph"),
        default="model",
        help="Cubical model JSON or its intersection graph (default: model)",
    )

    p = sub.add_parser("verify-trace", help="Replay a trace with full precondition checks")
    io(p)
    oracle(p)
    p.add_argument("--trace", "-t", type=str, required=True, help="Trace or thinning report JSON")
    p.add_argument("--expect", type=str, help="Graph the trace must end at")

    p = sub.add_parser("export-dot", help="Write a graph as DOT")
    io(p)

    p = sub.add_parser("sphere", help="Minimal digital n-sphere")
    io(p, needs_input=False)
    p.add_argument("--n", type=int, required=True, help="Sphere dimension")

    p = sub.add_parser("generate", help="Graph of a standard family")
    io(p, needs_input=False)
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True, help="Order (sphere: dimension)")

    p = sub.add_parser("census", help="Contractible connected graphs by order")
    io(p, needs_input=False)
    oracle(p)
    p.add_argument(
        "--max-n",
        type=int,
        default=4,
        help=f"Largest order, at most {EXHAUSTIVE_MAX_VERTICES} (default: 4)",
    )
    p.add_argument("--greedy", action="store_true", help="Also compare greedy reduction")

    p = sub.add_parser("experiment", help="Run surface experiments from presets")
    io(p, needs_input=False)
    oracle(p)
    set_size(p)
    p.add_argument(
        "--preset",
        nargs="+",
        choices=get_available_presets(),
        default=[DEFAULT_PRESET],
        help=f"Presets to run (default: {DEFAULT_PRESET})",
    )
    p.add_argument("--verbose", "-v", action="store_true", help="Print progress to stderr")

    return parser.parse_args(argv)


# =============================================================================
# Subcommands
# =============================================================================


def run_check(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    try:
        result = is_contractible_escalating(g, OracleBudget(args.budget), args.attempts)
    except UndecidedError as e:
        write_json(args.output, {"contractible": None, "undecided": True})
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_UNDECIDED
    data: dict = {"contractible": result.contractible}
    if result.certificate is not None:
        data["certificate"] = certificate_to_dict(result.certificate)
    write_json(args.output, data)
    return EXIT_OK if result.contractible else EXIT_NEGATIVE


def run_simple(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    budget = OracleBudget(args.budget)
    points = enumerate_simple_points(g, budget)
    edges = enumerate_simple_edges(g, budget)
    top = min(args.max_set_size, len(g))
    sets = enumerate_simple_sets(g, 2, top, budget) if top >= 2 else None
    write_json(
        args.output,
        {
            "points": points.simple,
            "edges": [list(e) for e in edges.simple],
            "sets": [list(s) for s in sets.simple] if sets else [],
            "undecided": {
                "points": points.undecided,
                "edges": [list(e) for e in edges.undecided],
                "sets": [list(s) for s in sets.undecided] if sets else [],
            },
        },
    )
    if points.undecided or edges.undecided or (sets and sets.undecided):
        print("Warning: some candidates were undecided within the budget", file=sys.stderr)
        return EXIT_UNDECIDED
    return EXIT_OK


def run_thin(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    cfg = ThinningConfig(max_set_size=args.max_set_size, budget=OracleBudget(args.budget))
    report = thin(g, cfg, verbose=args.verbose)
    if args.trace_output:
        write_json(args.trace_output, trace_to_dict(report.trace))
    if args.skeleton_only:
        write_json(args.output, graph_to_dict(report.skeleton))
    else:
        write_json(args.output, report_to_dict(report))
    if args.verbose:
        print(
            f"Skeleton: {len(report.skeleton)} vertices, {report.skeleton.edge_count} edges "
            f"after {len(report.trace)} steps",
            file=sys.stderr,
        )
    return EXIT_OK


def run_invariants(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    if args.max_dim is None:
        write_json(args.output, invariants_to_dict(invariant_summary(g)))
        return EXIT_OK
    write_json(
        args.output,
        {
            "euler": euler_characteristic(g),
            "betti": list(betti_numbers(g, args.max_dim).betti),
            "clique_counts": clique_complex(g, args.max_dim).counts,
        },
    )
    return EXIT_OK


def experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    if args.preset:
        return EXPERIMENT_PRESETS[args.preset]
    if args.radius is None:
        raise ValueError("--radius is required without --preset")
    if args.shape:
        shape = Shape(args.shape)
    elif args.n is not None:
        shape = Shape.CIRCLE if args.n == 2 else Shape.SPHERE
    else:
        raise ValueError("one of --shape, --n or --preset is required")
    return ExperimentConfig(
        shape=shape,
        radius=args.radius,
        edge_length=args.edge_length,
        minor_radius=args.minor_radius,
        center=args.center,
    )


def run_cubify(args: argparse.Namespace) -> int:
    cfg = experiment_config(args)
    model = voxelize(create_surface(cfg), edge_length=cfg.edge_length)
    if args.emit == "graph":
        write_json(args.output, graph_to_dict(intersection_graph(model)))
    else:
        write_json(args.output, model_to_dict(model))
    return EXIT_OK


def run_verify_trace(args: argparse.Namespace) -> int:
    g0 = read_graph(args.input)
    trace = read_trace(args.trace)
    try:
        final = replay(trace, g0, OracleBudget(args.budget))
    except TraceReplayError as e:
        undecided = isinstance(e.__cause__, TransformRejected) and e.__cause__.undecided
        write_json(
            args.output,
            {"valid": False, "step_index": e.step_index, "reason": e.reason, "undecided": undecided},
        )
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_UNDECIDED if undecided else EXIT_NEGATIVE

    data = {"valid": True, "steps": len(trace), "final_digest": graph_digest(final)}
    if args.expect:
        expected = read_graph(args.expect)
        if graph_digest(expected) != graph_digest(final):
            data.update(valid=False, reason="final graph does not match --expect")
            write_json(args.output, data)
            print("Error: final graph does not match --expect", file=sys.stderr)
            return EXIT_NEGATIVE
    write_json(args.output, data)
    return EXIT_OK


def run_export_dot(args: argparse.Namespace) -> int:
    write_text(args.output, graph_to_dot(read_graph(args.input)))
    return EXIT_OK


def run_sphere(args: argparse.Namespace) -> int:
    write_json(args.output, graph_to_dict(minimal_digital_sphere(args.n)))
    return EXIT_OK


def run_generate(args: argparse.Namespace) -> int:
    write_json(args.output, graph_to_dict(FAMILIES[args.family](args.n)))
    return EXIT_OK


def run_census(args: argparse.Namespace) -> int:
    budget = OracleBudget(args.budget)
    data = census_to_dict(contractible_census(args.max_n, budget))
    if args.greedy:
        findings = greedy_oracle_findings(connected_atlas_graphs(args.max_n), budget)
        data["greedy_findings"] = [graph_to_dict(g) for g in findings]
    write_json(args.output, data)
    return EXIT_OK


def run_experiment(args: argparse.Namespace) -> int:
    cfg = ThinningConfig(max_set_size=args.max_set_size, budget=OracleBudget(args.budget))
    reports = []
    for name in args.preset:
        print(f"Running {name}...", file=sys.stderr)
        reports.append(
            run_surface_experiment(EXPERIMENT_PRESETS[name], cfg, name=name, verbose=args.verbose)
        )
    data: dict = {"experiments": [experiment_to_dict(r) for r in reports]}
    if len(reports) > 1:
        data["comparison"] = comparison_to_dict(compare_experiments(reports))
    write_json(args.output, data)
    broken = [r.name for r in reports if not r.invariants_preserved]
    if broken:
        print(f"Error: invariants changed by thinning in {', '.join(broken)}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


COMMANDS = {
    "check": run_check,
    "simple": run_simple,
    "thin": run_thin,
    "invariants": run_invariants,
    "cubify": run_cubify,
    "verify-trace": run_verify_trace,
    "export-dot": run_export_dot,
    "sphere": run_sphere,
    "generate": run_generate,
    "census": run_census,
    "experiment": run_experiment,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    args = parse_args(argv)

    try:
        return COMMANDS[args.command](args)

    except FileNotFoundError as e:
        print(f"Error: File not found - {e}", file=sys.stderr)
        return EXIT_INPUT
    except UndecidedError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_UNDECIDED
    except TransformRejected as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_UNDECIDED if e.undecided else EXIT_INPUT
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InternalConsistencyError as e:
        print(f"Error: internal consistency failure - {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
