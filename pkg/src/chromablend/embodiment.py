"""Graphical embodiments of colour clusters and their edge-count formulas.

Three constructions are provided for a cluster with classes of weights
r1..rl (N = sum of weights):

* edge-maximal: the complete multipartite graph on the class weights,
  with ``eps_plus = C(N,2) - sum C(ri,2) = sum_{i<j} ri*rj`` edges;
* edge-minimal keeping the colour count forced at l: a clique on one
  representative per class with every remaining vertex pendant, giving
  ``eps_minus = N + l*(l-3)/2`` edges;
* edge-minimal merely proper: a spider tree with N-1 edges.

The two minimal builders and ``epsilon_minus`` are defined for base
clusters only (singleton labels c1..cl, l >= 2); the maximal builder also
accepts blended clusters and single-class clusters (edgeless graph).
"""

from __future__ import annotations

from math import comb

from .cluster import ColourCluster
from .errors import CapExceededError, ChromablendError, ValidationError
from .graph import ColouredGraph

DEFAULT_MATERIALIZATION_CAP = 2000


def _require_base(cluster: ColourCluster, operation: str) -> int:
    """Return l after checking the cluster is a base cluster with l >= 2."""
    if not cluster.is_base:
        raise ValidationError(
            f"{operation} is defined for base clusters only "
            f"(singleton labels c1..cl), got {cluster}"
        )
    ell = cluster.num_classes
    if ell < 2:
        raise ValidationError(f"{operation} needs at least two colour classes")
    return ell


def _require_cap(total: int, cap: int) -> int:
    if cap < 1:
        raise ValidationError(f"materialization cap must be >= 1, got {cap}")
    if total > cap:
        raise CapExceededError(
            f"building a graph on {total} vertices exceeds the materialization cap {cap}"
        )
    return total


def epsilon_plus_binomial(cluster: ColourCluster) -> int:
    """C(N,2) minus the within-class pair counts."""
    n = cluster.total_weight
    return comb(n, 2) - sum(comb(w, 2) for w in cluster.weights())


def epsilon_plus_pairwise(cluster: ColourCluster) -> int:
    """Sum of ri*rj over unordered pairs of distinct classes."""
    weights = cluster.weights()
    total = 0
    for i in range(len(weights)):
        for j in range(i + 1, len(weights)):
            total += weights[i] * weights[j]
    return total


def epsilon_plus(cluster: ColourCluster) -> int:
    """Maximum edge count of an embodiment of the cluster.

    Evaluates both closed forms and insists they agree before returning.
    """
    a = epsilon_plus_binomial(cluster)
    b = epsilon_plus_pairwise(cluster)
    if a != b:
        raise ChromablendError(
            f"edge-count formulas disagree for {cluster}: {a} != {b}"
        )
    return a


def epsilon_minus(cluster: ColourCluster) -> int:
    """Minimum edge count keeping the colour count of the embodiment at l."""
    ell = _require_base(cluster, "epsilon_minus")
    return cluster.total_weight + ell * (ell - 3) // 2


def eps_equality_holds(cluster: ColourCluster) -> bool:
    """Whether the minimal and maximal edge counts coincide."""
    _require_base(cluster, "eps_equality_holds")
    return epsilon_minus(cluster) == epsilon_plus(cluster)


def _part_offsets(cluster: ColourCluster) -> list[int]:
    offsets = [0]
    for c in cluster.classes:
        offsets.append(offsets[-1] + c.weight)
    return offsets


def build_max_embodiment(
    cluster: ColourCluster, cap: int = DEFAULT_MATERIALIZATION_CAP
) -> ColouredGraph:
    """Complete multipartite graph with one part per class (part = weight).

    A single-class cluster yields the edgeless graph on its weight.
    """
    n = _require_cap(cluster.total_weight, cap)
    offsets = _part_offsets(cluster)
    labels: list = []
    for c in cluster.classes:
        labels.extend([c.label] * c.weight)
    edges = []
    k = cluster.num_classes
    for i in range(k):
        for j in range(i + 1, k):
            for u in range(offsets[i], offsets[i + 1]):
                for v in range(offsets[j], offsets[j + 1]):
                    edges.append((u, v))
    return ColouredGraph(n, tuple(edges), tuple(labels))


def build_min_chromatic_embodiment(
    cluster: ColourCluster, cap: int = DEFAULT_MATERIALIZATION_CAP
) -> ColouredGraph:
    """Sparsest embodiment that still needs all l colours.

    One representative per class forms a clique; every other vertex hangs as
    a pendant off a representative of a different class: vertex j >= 2 of
    class i attaches to the class-1 representative (to the class-2 one when
    i == 1), which keeps the colouring proper and the graph connected with
    exactly ``epsilon_minus`` edges.
    """
    ell = _require_base(cluster, "build_min_chromatic_embodiment")
    n = _require_cap(cluster.total_weight, cap)
    offsets = _part_offsets(cluster)
    reps = [offsets[i] for i in range(ell)]
    labels: list = []
    for c in cluster.classes:
        labels.extend([c.label] * c.weight)
    edges = [(reps[i], reps[j]) for i in range(ell) for j in range(i + 1, ell)]
    for i, c in enumerate(cluster.classes):
        anchor = reps[1] if i == 0 else reps[0]
        for v in range(offsets[i] + 1, offsets[i + 1]):
            edges.append((anchor, v))
    assert len(edges) == cluster.total_weight + ell * (ell - 3) // 2
    return ColouredGraph(n, tuple(edges), tuple(labels))


def build_min_proper_embodiment(
    cluster: ColourCluster, cap: int = DEFAULT_MATERIALIZATION_CAP
) -> ColouredGraph:
    """Sparsest connected graph the cluster colours properly: a spider tree.

    Every vertex outside class 1 attaches to the class-1 representative;
    extra class-1 vertices attach to the class-2 representative. N-1 edges.
    """
    _require_base(cluster, "build_min_proper_embodiment")
    n = _require_cap(cluster.total_weight, cap)
    offsets = _part_offsets(cluster)
    centre = offsets[0]
    second = offsets[1]
    labels: list = []
    for c in cluster.classes:
        labels.extend([c.label] * c.weight)
    edges = []
    for v in range(second, n):
        edges.append((centre, v))
    for v in range(offsets[0] + 1, offsets[1]):
        edges.append((second, v))
    assert len(edges) == n - 1
    return ColouredGraph(n, tuple(edges), tuple(labels))
