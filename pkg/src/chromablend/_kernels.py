"""Exact-search kernels over int64 bitmask adjacency.

Graphs small enough for the oracle (<= 63 vertices, in practice <= 24) are
encoded as one int64 word per vertex: bit u of ``adj[v]`` is set when uv is
an edge. The kernels below are written in nopython style so the very same
source runs two ways:

* compiled through ``numba.njit(cache=True)`` (the default), or
* interpreted as plain Python over numpy scalars (the fallback),

selected by the ``CHROMABLEND_BACKEND`` environment variable (``numba``,
``pure``, or ``auto``). Both paths execute identical control flow, so
results, including colouring witnesses, are bit-for-bit the same.

Search determinism: callers pass an explicit vertex ``order`` (descending
degree, ties by ascending id) and colours are tried smallest-first with the
usual first-use symmetry break, so "the first solution found" is a stable,
canonical witness.
"""

from __future__ import annotations

import os
from typing import Callable, NamedTuple

import numpy as np

from .errors import ValidationError


def _greedy_clique_size(adj, order):
    # First-fit clique along the given order; a cheap chi/omega lower bound.
    n = adj.shape[0]
    members = np.int64(0)
    size = 0
    for idx in range(n):
        v = order[idx]
        if (members & ~adj[v]) == 0:
            members |= np.int64(1) << v
            size += 1
    return size


def _greedy_colouring_size(adj, order):
    # First-fit colouring along the given order; a cheap chi upper bound.
    n = adj.shape[0]
    colours = np.full(n, -1, np.int64)
    used = 0
    for idx in range(n):
        v = order[idx]
        forbidden = np.int64(0)
        row = adj[v]
        for u in range(n):
            if ((row >> u) & 1) != 0 and colours[u] >= 0:
                forbidden |= np.int64(1) << colours[u]
        c = 0
        while ((forbidden >> c) & 1) != 0:
            c += 1
        colours[v] = c
        if c + 1 > used:
            used = c + 1
    return used


def _k_colourable(adj, order, k, colours_out):
    # Iterative backtracking over `order`; colour c is admissible at a node
    # when no coloured neighbour holds it and c <= (#colours used so far),
    # which enumerates one canonical representative per colour partition.
    # On success the witness is written into colours_out (indexed by vertex).
    n = adj.shape[0]
    colours = np.full(n, -1, np.int64)
    last_tried = np.full(n, -1, np.int64)
    used_before = np.zeros(n + 1, np.int64)
    pos = 0
    while True:
        if pos == n:
            for i in range(n):
                colours_out[i] = colours[i]
            return True
        v = order[pos]
        forbidden = np.int64(0)
        row = adj[v]
        for u in range(n):
            if ((row >> u) & 1) != 0 and colours[u] >= 0:
                forbidden |= np.int64(1) << colours[u]
        limit = used_before[pos]
        if limit > k - 1:
            limit = k - 1
        c = last_tried[pos] + 1
        while c <= limit and ((forbidden >> c) & 1) != 0:
            c += 1
        if c <= limit:
            colours[v] = c
            last_tried[pos] = c
            grown = used_before[pos]
            if c + 1 > grown:
                grown = c + 1
            used_before[pos + 1] = grown
            pos += 1
        else:
            last_tried[pos] = -1
            colours[v] = -1
            pos -= 1
            if pos < 0:
                return False
            colours[order[pos]] = -1


def _max_clique_size(adj, initial_best):
    # Branch and bound with an explicit stack (include/skip the lowest
    # candidate vertex, prune on size + popcount(candidates) <= best).
    # Stack frames never exceed n*(n+1)/2 + 1 outstanding entries.
    n = adj.shape[0]
    best = initial_best
    if n == 0:
        return best
    cap = n * n + n + 4
    stack_p = np.zeros(cap, np.int64)
    stack_s = np.zeros(cap, np.int64)
    full = np.int64(0)
    for v in range(n):
        full |= np.int64(1) << v
    stack_p[0] = full
    stack_s[0] = 0
    sp = 1
    while sp > 0:
        sp -= 1
        p = stack_p[sp]
        size = stack_s[sp]
        if size > best:
            best = size
        while p != 0:
            remaining = p
            count = 0
            while remaining != 0:
                remaining &= remaining - 1
                count += 1
            if size + count <= best:
                break
            low = p & (-p)
            v = 0
            while ((low >> v) & 1) == 0:
                v += 1
            p &= p - 1
            stack_p[sp] = p & adj[v]
            stack_s[sp] = size + 1
            sp += 1
    return best


class Kernels(NamedTuple):
    name: str
    greedy_clique_size: Callable
    greedy_colouring_size: Callable
    k_colourable: Callable
    max_clique_size: Callable


def build_kernels(jit: bool) -> Kernels:
    """Build a kernel set; ``jit=True`` compiles the same sources with numba."""
    if not jit:
        return Kernels(
            "pure",
            _greedy_clique_size,
            _greedy_colouring_size,
            _k_colourable,
            _max_clique_size,
        )
    from numba import njit

    wrap = njit(cache=True)
    return Kernels(
        "numba",
        wrap(_greedy_clique_size),
        wrap(_greedy_colouring_size),
        wrap(_k_colourable),
        wrap(_max_clique_size),
    )


_CACHE: dict[str, Kernels] = {}


def _resolve_backend_name(override: str | None = None) -> str:
    name = override if override is not None else os.environ.get("CHROMABLEND_BACKEND", "auto")
    name = name.strip().lower() or "auto"
    if name == "auto":
        try:
            import numba  # noqa: F401
        except ImportError:
            return "pure"
        return "numba"
    if name in ("numba", "pure"):
        return name
    raise ValidationError(
        f"unknown CHROMABLEND_BACKEND value {name!r}; use 'numba', 'pure', or 'auto'"
    )


def get_kernels(backend: str | None = None) -> Kernels:
    """Kernel set for the requested (or environment-selected) backend."""
    name = _resolve_backend_name(backend)
    if name not in _CACHE:
        if name == "numba":
            try:
                _CACHE[name] = build_kernels(jit=True)
            except ImportError as exc:
                raise ValidationError(
                    "CHROMABLEND_BACKEND=numba but numba is not importable"
                ) from exc
        else:
            _CACHE[name] = build_kernels(jit=False)
    return _CACHE[name]


def active_backend() -> str:
    """Name of the backend get_kernels() would hand out right now."""
    return _resolve_backend_name()
