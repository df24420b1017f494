"""Colour labels, colour classes, and colour clusters.

A colour label is the set of base-colour indices mixed into a colour:
``c1`` is the plain base colour 1, ``c1,3`` the blend of colours 1 and 3.
Blending is set union, so it is commutative, associative, and idempotent.
A colour class pairs a label with a weight (how many vertices carry it),
and a cluster is a canonically ordered sequence of classes with pairwise
distinct labels.

Weights are plain Python integers on purpose: blending multiplies weights
across iterations and they outgrow fixed-width types almost immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import ValidationError


@dataclass(frozen=True, order=True)
class ColourLabel:
    """A colour as the canonical sorted set of base-colour indices (>= 1)."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            raw = tuple(self.members)
        except TypeError as exc:
            raise ValidationError(f"colour label members must be iterable: {exc}") from exc
        for i in raw:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise ValidationError(
                    f"base-colour indices must be integers >= 1, got {i!r}"
                )
        if not raw:
            raise ValidationError("a colour label needs at least one base-colour index")
        object.__setattr__(self, "members", tuple(sorted(set(raw))))

    @property
    def max_index(self) -> int:
        return self.members[-1]

    @property
    def is_singleton(self) -> bool:
        return len(self.members) == 1

    def blend(self, other: "ColourLabel") -> "ColourLabel":
        """Mix two colours: the union of their base-colour index sets."""
        return ColourLabel(self.members + other.members)

    def __str__(self) -> str:
        return "c" + ",".join(str(i) for i in self.members)


def blend_labels(a: ColourLabel, b: ColourLabel) -> ColourLabel:
    """Blend two colour labels (set union of their members)."""
    return a.blend(b)


@dataclass(frozen=True)
class ColourClass:
    """A colour label together with its weight (vertex count, >= 1)."""

    label: ColourLabel
    weight: int

    def __post_init__(self) -> None:
        if not isinstance(self.label, ColourLabel):
            object.__setattr__(self, "label", ColourLabel(self.label))
        if not isinstance(self.weight, int) or isinstance(self.weight, bool):
            raise ValidationError(f"colour weight must be an integer, got {self.weight!r}")
        if self.weight < 1:
            raise ValidationError(f"colour weight must be >= 1, got {self.weight}")

    def __str__(self) -> str:
        return f"{self.label}:{self.weight}"


RawClass = Union[ColourClass, tuple]


@dataclass(frozen=True)
class ColourCluster:
    """A canonical colour cluster: classes sorted by label, labels distinct.

    Construction validates canonical form; use :func:`normalize` to build a
    cluster from unsorted raw classes (it merges duplicate labels by summing
    their weights).
    """

    classes: tuple[ColourClass, ...]

    def __post_init__(self) -> None:
        classes = tuple(self.classes)
        if not classes:
            raise ValidationError("a colour cluster needs at least one colour class")
        for c in classes:
            if not isinstance(c, ColourClass):
                raise ValidationError(f"cluster entries must be ColourClass, got {c!r}")
        for a, b in zip(classes, classes[1:]):
            if a.label.members >= b.label.members:
                raise ValidationError(
                    "cluster classes must be sorted by label with pairwise distinct "
                    f"labels; saw {a.label} before {b.label} (use normalize())"
                )
        object.__setattr__(self, "classes", classes)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def palette_size(self) -> int:
        """Number of base colours in play (the largest index that appears)."""
        return max(c.label.max_index for c in self.classes)

    @property
    def total_weight(self) -> int:
        """Total vertex count N carried by the cluster."""
        return sum(c.weight for c in self.classes)

    @property
    def is_base(self) -> bool:
        """True when the classes are exactly the singletons c1..cl in order."""
        return all(
            c.label.members == (i,) for i, c in enumerate(self.classes, start=1)
        )

    def labels(self) -> tuple[ColourLabel, ...]:
        return tuple(c.label for c in self.classes)

    def weights(self) -> tuple[int, ...]:
        return tuple(c.weight for c in self.classes)

    def __iter__(self) -> Iterator[ColourClass]:
        return iter(self.classes)

    def __str__(self) -> str:
        return "[" + " ".join(str(c) for c in self.classes) + "]"


def normalize(raw_classes: Iterable[RawClass]) -> ColourCluster:
    """Canonicalize raw classes: merge equal labels (summing weights) and sort.

    Accepts ColourClass instances or ``(label, weight)`` pairs. Total weight
    is preserved. Raises ValidationError on empty input.
    """
    merged: dict[tuple[int, ...], int] = {}
    count = 0
    for item in raw_classes:
        if not isinstance(item, ColourClass):
            item = ColourClass(*item)
        merged[item.label.members] = merged.get(item.label.members, 0) + item.weight
        count += 1
    if count == 0:
        raise ValidationError("cannot normalize an empty sequence of colour classes")
    return ColourCluster(
        tuple(ColourClass(ColourLabel(m), w) for m, w in sorted(merged.items()))
    )


def parse_cluster(literal: str) -> ColourCluster:
    """Parse a base-cluster literal ``"r1,r2,...,rl"`` (weights of c1..cl)."""
    tokens = [t.strip() for t in literal.split(",")]
    if not tokens or any(not t for t in tokens):
        raise ValidationError(f"malformed cluster literal {literal!r}")
    weights = []
    for t in tokens:
        try:
            w = int(t)
        except ValueError as exc:
            raise ValidationError(f"cluster literal entry {t!r} is not an integer") from exc
        if w < 1:
            raise ValidationError(f"cluster weights must be >= 1, got {w}")
        weights.append(w)
    return ColourCluster(
        tuple(ColourClass(ColourLabel((i,)), w) for i, w in enumerate(weights, start=1))
    )


def cluster_literal(cluster: ColourCluster) -> str:
    """Render a base cluster back to its ``"r1,r2,...,rl"`` literal."""
    if not cluster.is_base:
        raise ValidationError("only base clusters (singleton labels c1..cl) have a literal")
    return ",".join(str(w) for w in cluster.weights())


def relabel_label(label: ColourLabel, mapping: Mapping[int, int]) -> ColourLabel:
    """Apply a base-colour renaming to one label."""
    return ColourLabel(mapping[i] for i in label.members)


def relabel_cluster(cluster: ColourCluster, mapping: Mapping[int, int]) -> ColourCluster:
    """Apply a base-colour renaming classwise; a bijection never merges classes."""
    return normalize(
        (relabel_label(c.label, mapping), c.weight) for c in cluster.classes
    )


def add_colour_classwise(cluster: ColourCluster, index: int) -> ColourCluster:
    """Blend one extra base colour into every class of a cluster."""
    extra = ColourLabel((index,))
    return normalize(
        (blend_labels(extra, c.label), c.weight) for c in cluster.classes
    )
