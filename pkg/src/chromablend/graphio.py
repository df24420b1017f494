"""Read/write the plain-text graph format, plus DOT and JSON exports.

Text format::

    n m
    u v          (m edge lines, 0-based vertex ids)
    c v i,j,k    (optional colour lines: vertex v carries colours i,j,k; 1-based)

Blank lines and lines starting with ``#`` are ignored on input. Writers emit
canonical output (edges and colour lines sorted) so files are diff-stable.
"""

from __future__ import annotations

import json
from typing import Any

from .cluster import ColourLabel
from .errors import ValidationError
from .graph import ColouredGraph

# Fill colours for DOT export, assigned to distinct labels in sorted order.
_DOT_PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
)


def graph_to_text(graph: ColouredGraph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    for u, v in graph.edges:
        lines.append(f"{u} {v}")
    for v, lab in enumerate(graph.labels):
        if lab is not None:
            lines.append(f"c {v} " + ",".join(str(i) for i in lab.members))
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> ColouredGraph:
    rows = [
        row.strip()
        for row in text.splitlines()
        if row.strip() and not row.lstrip().startswith("#")
    ]
    if not rows:
        raise ValidationError("empty graph file")
    header = rows[0].split()
    if len(header) != 2:
        raise ValidationError(f"expected header 'n m', got {rows[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValidationError(f"non-integer header {rows[0]!r}") from exc
    if m < 0 or n < 0:
        raise ValidationError(f"negative counts in header {rows[0]!r}")
    if len(rows) < 1 + m:
        raise ValidationError(f"header promises {m} edges, file has {len(rows) - 1} data lines")
    edges = []
    for row in rows[1 : 1 + m]:
        parts = row.split()
        if len(parts) != 2:
            raise ValidationError(f"malformed edge line {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ValidationError(f"non-integer edge line {row!r}") from exc
    labels: list[ColourLabel | None] = [None] * n
    for row in rows[1 + m :]:
        parts = row.split()
        if len(parts) != 3 or parts[0] != "c":
            raise ValidationError(f"malformed colour line {row!r}")
        try:
            v = int(parts[1])
            members = tuple(int(t) for t in parts[2].split(","))
        except ValueError as exc:
            raise ValidationError(f"non-integer colour line {row!r}") from exc
        if not (0 <= v < n):
            raise ValidationError(f"colour line references missing vertex {v}")
        labels[v] = ColourLabel(members)
    return ColouredGraph(n, tuple(edges), tuple(labels))


def graph_to_dot(graph: ColouredGraph, name: str = "embodiment") -> str:
    """DOT export with one fill colour per distinct vertex label."""
    palette = {
        lab: _DOT_PALETTE[i % len(_DOT_PALETTE)]
        for i, lab in enumerate(graph.distinct_labels())
    }
    lines = [f"graph {name} {{", "  node [shape=circle style=filled];"]
    for v in range(graph.n):
        lab = graph.labels[v]
        if lab is None:
            lines.append(f'  v{v} [label="{v}" fillcolor="white"];')
        else:
            lines.append(f'  v{v} [label="{v}: {lab}" fillcolor="{palette[lab]}"];')
    for u, v in graph.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json_obj(graph: ColouredGraph) -> dict[str, Any]:
    return {
        "n": graph.n,
        "edges": [[u, v] for u, v in graph.edges],
        "labels": [
            list(lab.members) if lab is not None else None for lab in graph.labels
        ],
    }


def graph_from_json_obj(obj: dict[str, Any]) -> ColouredGraph:
    try:
        n = obj["n"]
        edges = tuple((int(u), int(v)) for u, v in obj["edges"])
        labels = tuple(
            ColourLabel(members) if members is not None else None
            for members in obj["labels"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed graph JSON: {exc}") from exc
    return ColouredGraph(n, edges, labels)


def graph_to_json(graph: ColouredGraph) -> str:
    return json.dumps(graph_to_json_obj(graph), indent=2) + "\n"


def parse_graph_json(text: str) -> ColouredGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    return graph_from_json_obj(obj)
