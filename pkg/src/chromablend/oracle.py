"""Exact desk-scale graph invariants used to cross-check every structural claim.

Everything here is exhaustive, deterministic, and capped: beyond the vertex
cap the oracle refuses instead of approximating. The chromatic-number search
runs backtracking in vertex order of descending degree, bounded below by a
greedily found clique and above by a first-fit colouring; the hot loops live
in :mod:`chromablend._kernels` and run jitted or pure per backend selection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import get_kernels
from .errors import CapExceededError, ChromablendError, ValidationError
from .graph import ColouredGraph

DEFAULT_ORACLE_CAP = 24


def _check_cap(graph: ColouredGraph, cap: int) -> None:
    if cap < 1:
        raise ValidationError(f"oracle vertex cap must be >= 1, got {cap}")
    if graph.n == 0:
        raise ValidationError("the oracle needs at least one vertex")
    if graph.n > cap:
        raise CapExceededError(
            f"graph on {graph.n} vertices exceeds the oracle cap {cap}"
        )


def _masks_and_order(graph: ColouredGraph) -> tuple[np.ndarray, np.ndarray]:
    masks = graph.adjacency_masks()
    degrees = np.array(graph.degrees(), dtype=np.int64)
    # Stable argsort of negated degrees: descending degree, ties by id.
    order = np.argsort(-degrees, kind="stable").astype(np.int64)
    return masks, order


def chromatic_colouring(
    graph: ColouredGraph, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number plus the canonical witness colouring (1-based).

    The witness is the first proper colouring found in the fixed search
    order, so repeated runs (on either backend) return identical output.
    """
    _check_cap(graph, cap)
    kernels = get_kernels()
    masks, order = _masks_and_order(graph)
    lower = int(kernels.greedy_clique_size(masks, order))
    upper = int(kernels.greedy_colouring_size(masks, order))
    witness = np.empty(graph.n, dtype=np.int64)
    for k in range(lower, upper + 1):
        if kernels.k_colourable(masks, order, k, witness):
            return k, tuple(int(c) + 1 for c in witness)
    raise ChromablendError("internal error: greedy upper bound was not colourable")


def chromatic_number(graph: ColouredGraph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Exact chromatic number of the graph structure (labels are ignored)."""
    return chromatic_colouring(graph, cap)[0]


def clique_number(graph: ColouredGraph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Exact order of a maximum clique."""
    _check_cap(graph, cap)
    kernels = get_kernels()
    masks, order = _masks_and_order(graph)
    lower = kernels.greedy_clique_size(masks, order)
    return int(kernels.max_clique_size(masks, lower))


def is_proper(graph: ColouredGraph) -> bool:
    """True iff no edge joins two vertices carrying the same label."""
    for v, lab in enumerate(graph.labels):
        if lab is None:
            raise ValidationError(f"vertex {v} is unlabelled")
    return all(graph.labels[u] != graph.labels[v] for u, v in graph.edges)


def triangle_free(graph: ColouredGraph) -> bool:
    if graph.n == 0:
        return True
    masks = graph.adjacency_masks()
    return all((masks[u] & masks[v]) == 0 for u, v in graph.edges)


def mycielski(graph: ColouredGraph) -> ColouredGraph:
    """The Mycielski construction on the graph structure.

    For input on n vertices and m edges the output has 2n+1 vertices and
    3m+n edges: shadow vertex n+i copies the neighbourhood of i, and hub 2n
    joins every shadow. It preserves triangle-freeness and raises the
    chromatic number by one (when the input has an edge). Output carries no
    labels.
    """
    if graph.n < 1:
        raise ValidationError("mycielski needs at least one vertex")
    n = graph.n
    edges = list(graph.edges)
    for u, v in graph.edges:
        edges.append((n + u, v))
        edges.append((u, n + v))
    hub = 2 * n
    for u in range(n):
        edges.append((hub, n + u))
    return ColouredGraph(2 * n + 1, tuple(edges))


def t_chi_graph(graph: ColouredGraph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Iterations to total blending, computed as chromatic number minus one."""
    if graph.m < 1:
        raise ValidationError("t_chi needs a graph with at least one edge")
    return chromatic_number(graph, cap) - 1


@dataclass(frozen=True)
class GraphStats:
    chi: int
    omega: int
    delta: int
    triangle_free: bool
    t_chi: int

    def __post_init__(self) -> None:
        if not (self.omega <= self.chi <= self.delta + 1):
            raise ValidationError(
                f"inconsistent stats: omega={self.omega} chi={self.chi} delta={self.delta}"
            )
        if self.t_chi != self.chi - 1:
            raise ValidationError(f"t_chi={self.t_chi} must equal chi-1={self.chi - 1}")


def graph_stats(graph: ColouredGraph, cap: int = DEFAULT_ORACLE_CAP) -> GraphStats:
    chi = chromatic_number(graph, cap)
    return GraphStats(
        chi=chi,
        omega=clique_number(graph, cap),
        delta=graph.max_degree,
        triangle_free=triangle_free(graph),
        t_chi=chi - 1,
    )


def enumerate_chromatic_colourings(
    graph: ColouredGraph, limit: int = 3, cap: int = DEFAULT_ORACLE_CAP
) -> list[tuple[int, ...]]:
    """Up to ``limit`` genuinely different chromatic colourings (1-based).

    Colourings are enumerated one per colour-class partition (colour names
    canonicalized by first use along vertex id order), so two results never
    differ by a mere permutation of colours. Graphs whose chromatic
    colouring is unique as a partition, e.g. anything bipartite and
    connected, yield a single entry.
    """
    if limit < 1:
        raise ValidationError(f"limit must be >= 1, got {limit}")
    k = chromatic_number(graph, cap)
    adj = graph.adjacency_sets()
    n = graph.n
    colours = [0] * n
    found: list[tuple[int, ...]] = []

    def extend(v: int, used: int) -> bool:
        if v == n:
            found.append(tuple(colours))
            return len(found) >= limit
        forbidden = {colours[u] for u in adj[v] if u < v}
        top = min(used + 1, k)
        for c in range(1, top + 1):
            if c in forbidden:
                continue
            colours[v] = c
            if extend(v + 1, used if c <= used else c):
                return True
        colours[v] = 0
        return False

    extend(0, 0)
    return found
