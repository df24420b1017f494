#!/usr/bin/env python3
"""Compare the jitted and pure kernel backends on oracle-heavy workloads.

The oracle's exact searches dominate the verification sweeps, so this is
where the numba backend earns its keep. Each workload is warmed once per
backend (JIT compile / cache load happens outside the timing), run
``--repeats`` times, and the best wall time is reported. The checksums of
both backends must match, which doubles as an end-to-end equivalence check.

Usage: python benchmarks/bench_kernels.py [--repeats 3] [--samples 30]
"""

import argparse
import os
import random
import time

from chromablend.corpus import random_connected_subgraph, verification_corpus
from chromablend.oracle import (
    chromatic_number,
    clique_number,
    mycielski,
    t_chi_graph,
    triangle_free,
)


def corpus_invariants(corpus, _samples):
    total = 0
    for _, graph in corpus:
        total += chromatic_number(graph) + clique_number(graph)
    return total


def mycielski_lifts(corpus, _samples):
    # chi of up-to-19-vertex lifts; the not-(k-1)-colourable proofs are the
    # single most search-heavy calls in the whole package
    total = 0
    for _, graph in corpus:
        if triangle_free(graph):
            total += t_chi_graph(mycielski(graph))
    return total


def subgraph_sampling(corpus, samples):
    total = 0
    for name, graph in corpus:
        rng = random.Random(f"bench/{name}")
        for _ in range(samples):
            total += t_chi_graph(random_connected_subgraph(graph, rng))
    return total


WORKLOADS = (
    ("corpus chi+omega", corpus_invariants),
    ("mycielski lifts", mycielski_lifts),
    ("subgraph sampling", subgraph_sampling),
)


def time_backend(backend, corpus, repeats, samples):
    os.environ["CHROMABLEND_BACKEND"] = backend
    times = {}
    checksums = {}
    for name, fn in WORKLOADS:
        checksums[name] = fn(corpus, samples)  # warm-up run
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            fn(corpus, samples)
            best = min(best, time.perf_counter() - start)
        times[name] = best
    return times, checksums


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--samples", type=int, default=30,
                        help="subgraphs per corpus graph in the sampling workload")
    args = parser.parse_args()

    corpus = verification_corpus()
    print(f"corpus: {len(corpus)} graphs, repeats={args.repeats}, samples={args.samples}")

    pure_times, pure_sums = time_backend("pure", corpus, args.repeats, args.samples)
    numba_times, numba_sums = time_backend("numba", corpus, args.repeats, args.samples)

    if pure_sums != numba_sums:
        raise SystemExit(f"backend results disagree: {pure_sums} vs {numba_sums}")

    header = f"{'workload':<20} {'pure [s]':>10} {'numba [s]':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, _ in WORKLOADS:
        ratio = pure_times[name] / numba_times[name] if numba_times[name] > 0 else float("inf")
        print(f"{name:<20} {pure_times[name]:>10.4f} {numba_times[name]:>10.4f} {ratio:>8.1f}x")
    print(f"checksums match: {pure_sums == numba_sums}")


if __name__ == "__main__":
    main()
