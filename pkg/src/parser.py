"""Input parsing for graphs, certificates, traces and cubical models.

Graph text is either JSON or the DOT dialect written by ``graph_to_dot``.
Errors carry a position: ``line:column`` for syntax errors and a JSON path
for structural ones.
"""

import json
import re
import sys
from pathlib import Path
from typing import Any

from .errors import GraphFormatError
from .models import (
    ContractionCertificate,
    CubicalModel,
    Graph,
    Trace,
    Transformation,
    TransformKind,
    validate_label,
)

_ID = r'"(?:[^"\\]|\\.)*"|(?:[A-Za-z0-9_.+]|-(?!-))+'
_DOT_HEADER = re.compile(rf"(?:strict\s+)?graph(?:\s+(?:{_ID}))?\s*\{{")
_DOT_STATEMENT = re.compile(rf"(?:{_ID})(?:\s*--\s*(?:{_ID}))*\s*;?")
_DOT_TOKEN = re.compile(_ID)


def read_text(file_path: str | None) -> tuple[str, str]:
    """Read a file, or standard input when no path is given.

    Returns:
        The text and a source name for error messages
    """
    if file_path is None:
        return sys.stdin.read(), "<stdin>"
    return Path(file_path).read_text(encoding="utf-8"), file_path


def load_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(e.msg, f"{e.lineno}:{e.colno}", source) from e


# =============================================================================
# Graphs
# =============================================================================


def _label(value: Any, path: str, source: str) -> str:
    try:
        validate_label(value)
    except ValueError as e:
        raise GraphFormatError(str(e), path, source) from e
    return value


def _list(value: Any, path: str, source: str) -> list[Any]:
    if not isinstance(value, list):
        raise GraphFormatError(f"expected a list, got {type(value).__name__}", path, source)
    return value


def graph_from_dict(data: Any, source: str = "<input>") -> Graph:
    """Build a graph from ``{"vertices": [...], "edges": [[u, v], ...]}``."""
    if not isinstance(data, dict):
        raise GraphFormatError("expected an object", "$", source)
    for key in ("vertices", "edges"):
        if key not in data:
            raise GraphFormatError(f"missing key {key!r}", "$", source)

    vertices: list[str] = []
    seen: set[str] = set()
    for i, value in enumerate(_list(data["vertices"], "$.vertices", source)):
        label = _label(value, f"$.vertices[{i}]", source)
        if label in seen:
            raise GraphFormatError(f"duplicate vertex {label!r}", f"$.vertices[{i}]", source)
        seen.add(label)
        vertices.append(label)

    edges: list[tuple[str, str]] = []
    for i, value in enumerate(_list(data["edges"], "$.edges", source)):
        path = f"$.edges[{i}]"
        if not isinstance(value, list) or len(value) != 2:
            raise GraphFormatError("an edge is a list of two labels", path, source)
        u, v = (_label(w, path, source) for w in value)
        if u == v:
            raise GraphFormatError(f"self-loop on {u!r}", path, source)
        for w in (u, v):
            if w not in seen:
                raise GraphFormatError(f"edge endpoint {w!r} is not a vertex", path, source)
        edges.append((u, v))
    return Graph(vertices, edges)


def _unquote(token: str) -> str:
    if token.startswith('"'):
        return re.sub(r"\\(.)", r"\1", token[1:-1])
    return token


def parse_dot(text: str, source: str = "<input>") -> Graph:
    """Parse an undirected DOT graph of vertex and ``--`` edge statements."""
    vertices: set[str] = set()
    edges: list[tuple[str, str]] = []
    state = "header"
    last = (1, 1)
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(("//", "#")):
            continue
        position = f"{lineno}:{len(line) - len(line.lstrip()) + 1}"
        last = (lineno, len(line) + 1)
        if state == "header":
            if not _DOT_HEADER.fullmatch(stripped):
                raise GraphFormatError("expected 'graph G {'", position, source)
            state = "body"
        elif state == "body":
            if stripped == "}":
                state = "done"
                continue
            if not _DOT_STATEMENT.fullmatch(stripped):
                raise GraphFormatError(f"cannot parse statement {stripped!r}", position, source)
            labels = [_unquote(t) for t in _DOT_TOKEN.findall(stripped)]
            for label in labels:
                _label(label, position, source)
            vertices.update(labels)
            for u, v in zip(labels, labels[1:]):
                if u == v:
                    raise GraphFormatError(f"self-loop on {u!r}", position, source)
                edges.append((u, v))
        else:
            raise GraphFormatError("content after closing brace", position, source)
    if state != "done":
        raise GraphFormatError("unexpected end of input", f"{last[0]}:{last[1]}", source)
    return Graph(vertices, edges)


def parse_graph(text: str, source: str = "<input>") -> Graph:
    """Parse graph JSON, or DOT when the text does not start with ``{``."""
    if text.lstrip().startswith("{"):
        return graph_from_dict(load_json(text, source), source)
    return parse_dot(text, source)


def read_graph(file_path: str | None) -> Graph:
    text, source = read_text(file_path)
    return parse_graph(text, source)


# =============================================================================
# Certificates, traces and models
# =============================================================================


def parse_certificate(data: Any, source: str = "<input>") -> ContractionCertificate:
    if not isinstance(data, dict) or "deletion_order" not in data:
        raise GraphFormatError("missing key 'deletion_order'", "$", source)
    order = _list(data["deletion_order"], "$.deletion_order", source)
    return ContractionCertificate(
        tuple(_label(v, f"$.deletion_order[{i}]", source) for i, v in enumerate(order))
    )


def _labels(data: dict[str, Any], key: str, path: str, source: str) -> list[str]:
    if key not in data:
        raise GraphFormatError(f"missing key {key!r}", path, source)
    values = _list(data[key], f"{path}.{key}", source)
    return [_label(v, f"{path}.{key}[{i}]", source) for i, v in enumerate(values)]


def parse_step(data: Any, path: str = "$", source: str = "<input>") -> Transformation:
    """Decode one trace step, checking that it carries the fields its kind needs."""
    if not isinstance(data, dict):
        raise GraphFormatError("expected an object", path, source)
    try:
        kind = TransformKind(data.get("kind"))
    except ValueError as e:
        raise GraphFormatError(f"unknown step kind {data.get('kind')!r}", f"{path}.kind", source) from e

    try:
        if kind == TransformKind.DELETE_POINT:
            return Transformation.delete_point(_label(data.get("vertex"), f"{path}.vertex", source))
        if kind == TransformKind.GLUE_POINT:
            vertex = _label(data.get("vertex"), f"{path}.vertex", source)
            return Transformation.glue_point(vertex, set(_labels(data, "rim", path, source)))
        if kind in (TransformKind.DELETE_EDGE, TransformKind.GLUE_EDGE):
            edge = _labels(data, "edge", path, source)
            if len(edge) != 2:
                raise GraphFormatError("an edge is a list of two labels", f"{path}.edge", source)
            if kind == TransformKind.DELETE_EDGE:
                return Transformation.delete_edge(*edge)
            return Transformation.glue_edge(*edge)
        members = _labels(data, "set", path, source)
        z = _label(data.get("z"), f"{path}.z", source)
        return Transformation.contract_set(set(members), z)
    except GraphFormatError:
        raise
    except ValueError as e:
        raise GraphFormatError(str(e), path, source) from e


def trace_from_dict(data: Any, source: str = "<input>") -> Trace:
    """Decode a trace, or the trace inside a thinning report."""
    if isinstance(data, dict) and "trace" in data and "skeleton" in data:
        data = data["trace"]
    if not isinstance(data, dict):
        raise GraphFormatError("expected an object", "$", source)
    digest = data.get("initial_digest")
    if not isinstance(digest, str) or not re.fullmatch(r"[0-9a-f]{64}", digest):
        raise GraphFormatError("initial_digest must be a SHA-256 hex string", "$.initial_digest", source)
    steps = _list(data.get("steps"), "$.steps", source)
    return Trace(
        initial_digest=digest,
        steps=tuple(parse_step(step, f"$.steps[{i}]", source) for i, step in enumerate(steps)),
    )


def read_trace(file_path: str | None) -> Trace:
    text, source = read_text(file_path)
    return trace_from_dict(load_json(text, source), source)


def model_from_dict(data: Any, source: str = "<input>") -> CubicalModel:
    if not isinstance(data, dict):
        raise GraphFormatError("expected an object", "$", source)
    n, edge_length = data.get("n"), data.get("L")
    if not isinstance(n, int) or n < 1:
        raise GraphFormatError("n must be a positive integer", "$.n", source)
    if not isinstance(edge_length, (int, float)) or edge_length <= 0:
        raise GraphFormatError("L must be a positive number", "$.L", source)
    cubes = []
    for i, index in enumerate(_list(data.get("cubes"), "$.cubes", source)):
        if not isinstance(index, list) or len(index) != n or not all(
            isinstance(k, int) for k in index
        ):
            raise GraphFormatError(f"cube index must be {n} integers", f"$.cubes[{i}]", source)
        cubes.append(tuple(index))
    return CubicalModel(n=n, edge_length=float(edge_length), cubes=frozenset(cubes))
