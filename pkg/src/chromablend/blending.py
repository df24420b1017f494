"""The chromatic-blending recursion.

One iteration: colour every edge of the current embodiment with the blend
of its endpoint colours, replace each edge by a new vertex carrying that
blend, discard the old vertices, and re-embody the resulting cluster
edge-maximally (complete multipartite on the blended classes). Iterating
from a cluster with l classes reaches a single all-blend class -- the
"null graph" state -- and the trace records every step on the way.

The recursion runs symbolically on (label, weight) pairs: the pair of
classes (A, wA), (B, wB) contributes the class (A union B, wA * wB), and
equal blended labels merge. Graphs are never materialized mid-run, because
weights grow multiplicatively and only the weights matter.

Iteration numbering: the input state is iteration 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .cluster import (
    ColourClass,
    ColourCluster,
    ColourLabel,
    blend_labels,
    normalize,
)
from .embodiment import epsilon_plus
from .errors import TerminalStateError, ValidationError
from .graph import ColouredGraph
from .oracle import DEFAULT_ORACLE_CAP, chromatic_number, is_proper


@dataclass(frozen=True)
class BlendStep:
    """One recorded iteration: the cluster and its embodiment's size."""

    iteration: int
    cluster: ColourCluster
    vertex_count: int
    edge_count: int


@dataclass(frozen=True)
class BlendTrace:
    steps: tuple[BlendStep, ...]

    def __post_init__(self) -> None:
        steps = tuple(self.steps)
        if not steps:
            raise ValidationError("a blend trace needs at least one step")
        for expected, step in enumerate(steps):
            if step.iteration != expected:
                raise ValidationError(
                    f"trace iterations must run 0..{len(steps) - 1}, "
                    f"got {step.iteration} at position {expected}"
                )
        for before, after in zip(steps, steps[1:]):
            if after.vertex_count != before.edge_count:
                raise ValidationError(
                    f"iteration {after.iteration} has {after.vertex_count} vertices "
                    f"but iteration {before.iteration} had {before.edge_count} edges"
                )
        final = steps[-1]
        if final.cluster.num_classes != 1 or final.edge_count != 0:
            raise ValidationError(
                "a complete trace ends with a single-class cluster and zero edges"
            )
        object.__setattr__(self, "steps", steps)

    @property
    def t_chi(self) -> int:
        """Iterations taken to reach total blending."""
        return len(self.steps) - 1

    @property
    def null_order(self) -> int:
        """Vertex count of the final (edgeless) state."""
        return self.steps[-1].vertex_count


def blend_step_cluster(cluster: ColourCluster) -> ColourCluster:
    """One symbolic iteration on the edge-maximal embodiment of a cluster."""
    classes = cluster.classes
    if len(classes) == 1:
        raise TerminalStateError(
            "single-class cluster has an edgeless embodiment; nothing to blend"
        )
    raw = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            raw.append(
                (
                    blend_labels(classes[i].label, classes[j].label),
                    classes[i].weight * classes[j].weight,
                )
            )
    return normalize(raw)


def blend_step_graph(graph: ColouredGraph) -> ColourCluster:
    """Blend along the actual edges of a properly coloured graph."""
    for v, lab in enumerate(graph.labels):
        if lab is None:
            raise ValidationError(f"vertex {v} is unlabelled; colour the graph first")
    if graph.m == 0:
        raise TerminalStateError("edgeless graph: nothing to blend")
    raw = []
    for u, v in graph.edges:
        lu, lv = graph.labels[u], graph.labels[v]
        if lu == lv:
            raise ValidationError(
                f"improper colouring: edge {u}-{v} joins two {lu} vertices"
            )
        raw.append((blend_labels(lu, lv), 1))
    return normalize(raw)


def run_total_blending(cluster: ColourCluster) -> BlendTrace:
    """Iterate a base cluster to total blending, recording every step.

    Step t+1 always has as many vertices as step t had edges; the final step
    has a single class and zero edges. The trace asserts nothing itself.
    """
    if not cluster.is_base:
        raise ValidationError(
            "total blending starts from a base cluster (singleton labels c1..cl)"
        )
    if cluster.num_classes < 2:
        raise ValidationError("total blending needs at least two colour classes")
    steps = [BlendStep(0, cluster, cluster.total_weight, epsilon_plus(cluster))]
    current = cluster
    while current.num_classes > 1:
        current = blend_step_cluster(current)
        steps.append(
            BlendStep(len(steps), current, current.total_weight, epsilon_plus(current))
        )
    return BlendTrace(tuple(steps))


def cluster_of_colouring(graph: ColouredGraph) -> ColourCluster:
    """The colour cluster a fully labelled graph carries (one unit per vertex)."""
    for v, lab in enumerate(graph.labels):
        if lab is None:
            raise ValidationError(f"vertex {v} is unlabelled")
    return normalize((lab, 1) for lab in graph.labels)


def run_total_blending_from_graph(
    graph: ColouredGraph, cap: int = DEFAULT_ORACLE_CAP
) -> BlendTrace:
    """Blend a connected, chromatically coloured graph to total blending.

    Iteration 0 records the actual graph (its true edge count, which may be
    below the edge-maximal count for its cluster); iteration 1 blends along
    the graph's own edges; later iterations use the symbolic cluster rule.
    The colouring must be proper and use exactly as many colours as the
    graph's chromatic number.
    """
    if graph.m == 0:
        raise ValidationError("graph blending needs at least one edge")
    if not graph.is_connected():
        raise ValidationError("graph blending needs a connected graph")
    if not is_proper(graph):
        raise ValidationError("graph colouring is improper")
    start = cluster_of_colouring(graph)
    chi = chromatic_number(graph, cap)
    if start.num_classes != chi:
        raise ValidationError(
            f"colouring uses {start.num_classes} colours but the chromatic "
            f"number is {chi}; a chromatic colouring is required"
        )
    steps = [BlendStep(0, start, graph.n, graph.m)]
    current = blend_step_graph(graph)
    steps.append(
        BlendStep(1, current, current.total_weight, epsilon_plus(current))
    )
    while current.num_classes > 1:
        current = blend_step_cluster(current)
        steps.append(
            BlendStep(len(steps), current, current.total_weight, epsilon_plus(current))
        )
    return BlendTrace(tuple(steps))


def max_edge_iteration(trace: BlendTrace) -> tuple[int, int]:
    """First iteration attaining the maximum edge count, and that count."""
    best_iteration = trace.steps[0].iteration
    best = trace.steps[0].edge_count
    for step in trace.steps[1:]:
        if step.edge_count > best:
            best_iteration = step.iteration
            best = step.edge_count
    return best_iteration, best


def trace_to_json_obj(trace: BlendTrace) -> dict[str, Any]:
    """JSON-shaped trace document; big counts become decimal strings."""
    iteration, count = max_edge_iteration(trace)
    return {
        "t_chi": trace.t_chi,
        "null_order": str(trace.null_order),
        "max_edge_iteration": iteration,
        "max_edge_count": str(count),
        "steps": [
            {
                "iteration": s.iteration,
                "classes": [
                    {"label": list(c.label.members), "weight": str(c.weight)}
                    for c in s.cluster.classes
                ],
                "vertices": str(s.vertex_count),
                "edges": str(s.edge_count),
            }
            for s in trace.steps
        ],
    }


def trace_from_json_obj(obj: dict[str, Any]) -> BlendTrace:
    try:
        steps = tuple(
            BlendStep(
                iteration=int(s["iteration"]),
                cluster=ColourCluster(
                    tuple(
                        ColourClass(ColourLabel(c["label"]), int(c["weight"]))
                        for c in s["classes"]
                    )
                ),
                vertex_count=int(s["vertices"]),
                edge_count=int(s["edges"]),
            )
            for s in obj["steps"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed trace JSON: {exc}") from exc
    return BlendTrace(steps)


def trace_to_json(trace: BlendTrace) -> str:
    return json.dumps(trace_to_json_obj(trace), indent=2) + "\n"


def parse_trace_json(text: str) -> BlendTrace:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid trace JSON: {exc}") from exc
    return trace_from_json_obj(obj)
