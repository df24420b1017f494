"""Simple undirected graphs whose vertices may carry colour labels.

Vertex ids are 0-based consecutive integers. Edges are canonicalized to
``(min, max)`` pairs, sorted, with loops and parallel edges rejected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .cluster import ColourLabel
from .errors import ValidationError

# One int64 bitmask word per vertex; bit 63 is kept clear.
_MASK_LIMIT = 63


@dataclass(frozen=True)
class ColouredGraph:
    """A simple graph; ``labels[v]`` is the colour of vertex v or None."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    labels: Optional[tuple[Optional[ColourLabel], ...]] = None

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise ValidationError(f"vertex count must be a non-negative integer, got {self.n!r}")
        canon = []
        for e in self.edges:
            try:
                u, v = e
                u, v = int(u), int(v)
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"malformed edge {e!r}") from exc
            if u == v:
                raise ValidationError(f"loop edge {u}-{v} is not allowed in a simple graph")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"edge {u}-{v} references a missing vertex (n={self.n})")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValidationError(f"parallel edge {a[0]}-{a[1]} is not allowed")
        object.__setattr__(self, "edges", tuple(canon))
        if self.labels is None:
            object.__setattr__(self, "labels", (None,) * self.n)
        else:
            labs = []
            for lab in self.labels:
                if lab is None or isinstance(lab, ColourLabel):
                    labs.append(lab)
                else:
                    labs.append(ColourLabel(lab))
            if len(labs) != self.n:
                raise ValidationError(
                    f"expected {self.n} vertex labels, got {len(labs)}"
                )
            object.__setattr__(self, "labels", tuple(labs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_fully_labelled(self) -> bool:
        return all(lab is not None for lab in self.labels)

    def adjacency_sets(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_masks(self) -> np.ndarray:
        """Bitmask adjacency: bit u of ``masks[v]`` is set when uv is an edge."""
        if self.n > _MASK_LIMIT:
            raise ValidationError(
                f"bitmask adjacency supports at most {_MASK_LIMIT} vertices, got {self.n}"
            )
        masks = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            masks[u] |= np.int64(1) << np.int64(v)
            masks[v] |= np.int64(1) << np.int64(u)
        return masks

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency_sets()
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def distinct_labels(self) -> tuple[ColourLabel, ...]:
        return tuple(sorted({lab for lab in self.labels if lab is not None}))

    def with_labels(self, labels: Sequence[Optional[ColourLabel]]) -> "ColouredGraph":
        return ColouredGraph(self.n, self.edges, tuple(labels))

    def without_labels(self) -> "ColouredGraph":
        return ColouredGraph(self.n, self.edges)


def apply_colouring(graph: ColouredGraph, colours: Sequence[int]) -> ColouredGraph:
    """Label each vertex with the singleton colour ``colours[v]`` (1-based)."""
    if len(colours) != graph.n:
        raise ValidationError(
            f"colouring has {len(colours)} entries for a graph on {graph.n} vertices"
        )
    return graph.with_labels(tuple(ColourLabel((c,)) for c in colours))


def induced_subgraph(graph: ColouredGraph, vertices: Iterable[int]) -> ColouredGraph:
    """Subgraph induced on ``vertices``, relabelled to 0..k-1 in sorted order."""
    keep = sorted(set(vertices))
    if any(v < 0 or v >= graph.n for v in keep):
        raise ValidationError("induced subgraph references a missing vertex")
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index
    ]
    labels = tuple(graph.labels[v] for v in keep)
    return ColouredGraph(len(keep), tuple(edges), labels)
