"""Edge-list text, label sidecars, DOT and JSON renderings of a graph.

Edge-list format::

    n <order>
    <u> <v>
    ...

Ids are 0-based, blank lines are ignored and ``#`` starts a comment line.
Vertex labels travel in a ``<path>.labels`` sidecar with one ``<id> <label>``
line per vertex.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError

__all__ = [
    "EdgeListError",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
    "labels_path",
    "format_labels",
    "parse_labels",
    "to_dot",
    "to_json_dict",
]


class EdgeListError(GraphError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_edge_list(text: str, labels: list[str] | None = None) -> Graph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise EdgeListError("empty edge list: missing 'n <order>' header") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise EdgeListError(f"line {lineno}: expected 'n <order>', got {header!r}")
    try:
        order = int(parts[1])
    except ValueError:
        raise EdgeListError(f"line {lineno}: order is not an integer") from None
    edges = []
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: expected '<u> <v>', got {line!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListError(f"line {lineno}: vertex ids must be integers") from None
    try:
        return Graph(order, edges, labels)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    out = [f"n {g.order}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def labels_path(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".labels")


def format_labels(g: Graph) -> str:
    return "".join(f"{u} {g.label(u)}\n" for u in g.vertices())


def parse_labels(text: str, order: int) -> list[str]:
    labels: dict[int, str] = {}
    for lineno, line in _content_lines(text):
        vid, _, label = line.partition(" ")
        try:
            labels[int(vid)] = label.strip()
        except ValueError:
            raise EdgeListError(f"labels line {lineno}: bad vertex id {vid!r}") from None
    if sorted(labels) != list(range(order)):
        raise EdgeListError(f"label sidecar must name every vertex 0..{order - 1}")
    return [labels[u] for u in range(order)]


def read_edge_list(path: str | Path) -> Graph:
    """Read an edge list, picking up a ``.labels`` sidecar when present."""
    path = Path(path)
    g = parse_edge_list(path.read_text())
    side = labels_path(path)
    if side.exists():
        g = g.with_labels(parse_labels(side.read_text(), g.order))
    return g


def write_edge_list(g: Graph, path: str | Path) -> None:
    path = Path(path)
    path.write_text(format_edge_list(g))
    if g.labels is not None:
        labels_path(path).write_text(format_labels(g))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str | None = None) -> str:
    head = f"graph {name} {{" if name else "graph {"
    out = [head]
    if g.labels is not None:
        out.extend(f"  {u} [label={_dot_quote(g.label(u))}];" for u in g.vertices())
    else:
        out.extend(f"  {u};" for u in g.vertices() if g.degree(u) == 0)
    out.extend(f"  {u} -- {v};" for u, v in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"


def to_json_dict(g: Graph) -> dict:
    return {
        "order": g.order,
        "labels": [g.label(u) for u in g.vertices()],
        "edges": [list(e) for e in g.edges],
    }
