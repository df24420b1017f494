"""Deterministic graph corpus for the verification sweeps.

Well over one hundred connected graphs on at most 9 vertices: paths,
cycles, complete graphs, complete multipartite graphs, Mycielski graphs of
tiny seeds, and seeded pseudo-random connected graphs. Builders here are
deliberately independent of the embodiment module so the sweeps cross-check
two separate construction routes.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Sequence

from .errors import ValidationError
from .graph import ColouredGraph
from .oracle import mycielski

CORPUS_SEED = "chromablend-corpus-1"

_MULTIPARTITE_PARTS: tuple[tuple[int, ...], ...] = (
    (1, 2), (1, 3), (1, 4), (1, 8), (2, 2), (2, 3), (2, 4), (2, 7),
    (3, 3), (3, 4), (3, 6), (4, 4), (4, 5),
    (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3), (2, 2, 2), (2, 2, 3),
    (2, 3, 4), (3, 3, 3),
    (1, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 2), (2, 2, 2, 2), (1, 1, 1, 3),
    (1, 1, 1, 1, 2), (1, 1, 2, 2, 2),
)


def path_graph(n: int) -> ColouredGraph:
    if n < 1:
        raise ValidationError("a path needs at least one vertex")
    return ColouredGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> ColouredGraph:
    if n < 3:
        raise ValidationError("a cycle needs at least three vertices")
    return ColouredGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> ColouredGraph:
    if n < 1:
        raise ValidationError("a complete graph needs at least one vertex")
    return ColouredGraph(
        n, tuple((i, j) for i in range(n) for j in range(i + 1, n))
    )


def complete_multipartite_graph(parts: Sequence[int]) -> ColouredGraph:
    if not parts or any(p < 1 for p in parts):
        raise ValidationError("part sizes must be positive")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    edges = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for u in range(offsets[a], offsets[a + 1]):
                for v in range(offsets[b], offsets[b + 1]):
                    edges.append((u, v))
    return ColouredGraph(offsets[-1], tuple(edges))


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        comp = [s]
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def random_connected_graph(n: int, p: float, rng: random.Random) -> ColouredGraph:
    """G(n, p) conditioned on connectivity by bridging leftover components."""
    if n < 2:
        raise ValidationError("need at least two vertices")
    edges = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    }
    while True:
        comps = _components(n, edges)
        if len(comps) == 1:
            break
        edges.add((comps[0][0], comps[1][0]))
    return ColouredGraph(n, tuple(sorted(edges)))


def verification_corpus() -> list[tuple[str, ColouredGraph]]:
    """Named, ordered, fully deterministic corpus of connected graphs (n <= 9)."""
    entries: list[tuple[str, ColouredGraph]] = []
    for n in range(2, 10):
        entries.append((f"path-{n}", path_graph(n)))
    for n in range(3, 10):
        entries.append((f"cycle-{n}", cycle_graph(n)))
    for n in range(2, 10):
        entries.append((f"complete-{n}", complete_graph(n)))
    for parts in _MULTIPARTITE_PARTS:
        name = "multipartite-" + "-".join(str(p) for p in parts)
        entries.append((name, complete_multipartite_graph(parts)))
    mycielski_seeds = [
        ("k2", complete_graph(2)),
        ("k3", complete_graph(3)),
        ("k4", complete_graph(4)),
        ("p3", path_graph(3)),
        ("p4", path_graph(4)),
        ("c4", cycle_graph(4)),
    ]
    for name, seed_graph in mycielski_seeds:
        entries.append((f"mycielski-{name}", mycielski(seed_graph)))
    for n in range(5, 10):
        for p_pct in (30, 50, 70):
            for s in range(4):
                name = f"random-n{n}-p{p_pct}-s{s}"
                rng = random.Random(f"{CORPUS_SEED}/{name}")
                entries.append((name, random_connected_graph(n, p_pct / 100.0, rng)))
    return entries


def random_connected_subgraph(graph: ColouredGraph, rng: random.Random) -> ColouredGraph:
    """A random connected subgraph with at least one edge.

    Grows a random connected vertex set, keeps a spanning tree of the
    induced part, and coin-flips every remaining induced edge. The result is
    relabelled to 0..k-1 (sorted original ids), which preserves every
    isomorphism-invariant quantity.
    """
    if graph.n < 2 or graph.m < 1:
        raise ValidationError("need a connected graph with at least one edge")
    adj = graph.adjacency_sets()
    target = rng.randint(2, graph.n)
    start = rng.randrange(graph.n)
    chosen = {start}
    while len(chosen) < target:
        frontier = sorted({u for w in chosen for u in adj[w]} - chosen)
        if not frontier:
            break
        chosen.add(frontier[rng.randrange(len(frontier))])
    if len(chosen) < 2:
        # start had no neighbours: impossible for connected input, guarded anyway
        chosen.add(sorted(adj[start])[0])
    keep = sorted(chosen)
    index = {v: i for i, v in enumerate(keep)}
    induced = [
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index
    ]
    k = len(keep)
    tadj: list[list[int]] = [[] for _ in range(k)]
    for u, v in induced:
        tadj[u].append(v)
        tadj[v].append(u)
    for neighbours in tadj:
        neighbours.sort()
    tree: set[tuple[int, int]] = set()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in tadj[u]:
            if v not in seen:
                seen.add(v)
                tree.add((u, v) if u < v else (v, u))
                queue.append(v)
    kept = set(tree)
    for e in induced:
        if e not in kept and rng.random() < 0.5:
            kept.add(e)
    return ColouredGraph(k, tuple(sorted(kept)))
