"""JSON and DOT encoding of graphs, certificates, traces, reports and models."""

import hashlib
import json
from pathlib import Path
from typing import Any

from .models import (
    CensusRow,
    ContractionCertificate,
    CubicalModel,
    ExperimentComparison,
    ExperimentReport,
    Graph,
    InvariantSummary,
    ThinningReport,
    ThinningStats,
    Trace,
    Transformation,
    TransformKind,
)


def dumps(data: Any) -> str:
    """Compact, key-order-preserving JSON text."""
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {
        "vertices": g.sorted_vertices(),
        "edges": [list(edge) for edge in g.edges],
    }


def graph_to_json(g: Graph) -> str:
    """Sorted graph JSON: vertices sorted, each edge sorted, edge list sorted."""
    return dumps(graph_to_dict(g))


def graph_digest(g: Graph) -> str:
    """SHA-256 hex digest of the graph JSON."""
    return hashlib.sha256(graph_to_json(g).encode("utf-8")).hexdigest()


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: Graph) -> str:
    """Undirected DOT: one line per vertex, then one ``--`` line per edge."""
    lines = ["graph G {"]
    lines += [f"  {_quote(v)};" for v in g.sorted_vertices()]
    lines += [f"  {_quote(u)} -- {_quote(v)};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def certificate_to_dict(certificate: ContractionCertificate) -> dict[str, Any]:
    return {"deletion_order": list(certificate.deletion_order)}


def step_to_dict(step: Transformation) -> dict[str, Any]:
    data: dict[str, Any] = {"kind": step.kind.value}
    if step.kind == TransformKind.DELETE_POINT:
        data["vertex"] = step.vertex
    elif step.kind == TransformKind.GLUE_POINT:
        data["vertex"] = step.vertex
        data["rim"] = list(step.rim)
    elif step.kind in (TransformKind.DELETE_EDGE, TransformKind.GLUE_EDGE):
        data["edge"] = list(step.edge or ())
    else:
        data["set"] = list(step.members)
        data["z"] = step.z
    return data


def trace_to_dict(trace: Trace) -> dict[str, Any]:
    return {
        "initial_digest": trace.initial_digest,
        "steps": [step_to_dict(step) for step in trace.steps],
    }


def stats_to_dict(stats: ThinningStats) -> dict[str, int]:
    return {
        "points_deleted": stats.points_deleted,
        "sets_contracted": stats.sets_contracted,
        "undecided_candidates_skipped": stats.undecided_candidates_skipped,
    }


def report_to_dict(report: ThinningReport) -> dict[str, Any]:
    return {
        "skeleton": graph_to_dict(report.skeleton),
        "trace": trace_to_dict(report.trace),
        "stats": stats_to_dict(report.stats),
        "max_set_size": report.max_set_size,
    }


def invariants_to_dict(summary: InvariantSummary) -> dict[str, Any]:
    return {
        "euler": summary.euler,
        "betti": list(summary.betti.betti),
        "clique_counts": list(summary.clique_counts),
    }


def model_to_dict(model: CubicalModel) -> dict[str, Any]:
    return {
        "n": model.n,
        "L": float(model.edge_length),
        "cubes": [list(index) for index in model.sorted_cubes()],
    }


def write_text(file_path: str | None, text: str) -> None:
    """Write to a file, or to standard output when no path is given."""
    if file_path is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    Path(file_path).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def write_json(file_path: str | None, data: Any) -> None:
    write_text(file_path, dumps(data))


def census_to_dict(rows: list[CensusRow]) -> dict[str, Any]:
    return {
        "rows": [
            {
                "n": row.n,
                "connected": row.connected,
                "contractible": row.contractible,
                "exceptions": [graph_to_dict(g) for g in row.exceptions],
            }
            for row in rows
        ]
    }


def experiment_to_dict(report: ExperimentReport) -> dict[str, Any]:
    return {
        "name": report.name,
        "L": report.edge_length,
        "cubes": report.cubes,
        "graph": {"vertices": report.graph_vertices, "edges": report.graph_edges},
        "before": invariants_to_dict(report.before),
        "after": invariants_to_dict(report.after),
        "invariants_preserved": report.invariants_preserved,
        "skeleton": graph_to_dict(report.skeleton),
        "skeleton_is_minimal_sphere": report.skeleton_is_minimal_sphere,
        "stats": stats_to_dict(report.stats),
    }


def comparison_to_dict(comparison: ExperimentComparison) -> dict[str, Any]:
    return {
        "invariants_agree": comparison.invariants_agree,
        "skeletons_isomorphic": comparison.skeletons_isomorphic,
        "skeleton_sizes": comparison.skeleton_sizes,
    }
