"""Constructive box representations of dimension at most 2*Delta^2 + 2.

The pipeline: color the square of the input graph properly (greedy, so at
most Delta^2 + 1 colors), and for each color class emit two interval
realizations whose intersection is the input plus a clique on everything
outside the class.  Intersecting all of these per-class graphs leaves
exactly the input edges, so the stacked realizations form a valid box
representation with at most twice-the-color-count dimensions.

The classes of a proper coloring of the square have the property that no
outside vertex has two neighbors inside a class (two such neighbors would
be at distance two, hence adjacent in the square and differently colored).
That single fact is what makes the two per-class realizations work: class
vertices become points laid out left-to-right in one realization and
right-to-left in the other, and each outside vertex stretches from 0 up to
its unique class neighbor's point (or sits at [0, 0] if it has none).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from boxicity import _bitops
from boxicity.boxes import BoxRepresentation, prune
from boxicity.graphs import (
    Graph,
    VertexColoring,
    color_classes,
    greedy_color,
    smallest_last_order,
    square,
)
from boxicity.intervals import IntervalRealization

__all__ = [
    "ConstructOptions",
    "ConstructionTrace",
    "augmented_graph",
    "class_realizations",
    "construct_box_representation",
    "pipeline_check",
]


@dataclass(frozen=True)
class ConstructOptions:
    """Knobs for :func:`construct_box_representation`.

    ``order`` picks the vertex order fed to the greedy coloring of the
    square ("index" or "smallest-last").  ``trace`` controls audit output:
    "full" also stores the augmented graphs (O(k*n^2) memory), "slim" keeps
    only coloring, classes and realization pairs (O(k*n)), "off" returns no
    trace at all.
    """

    order: str = "index"
    prune: bool = True
    trace: str = "full"

    def __post_init__(self) -> None:
        if self.order not in ("index", "smallest-last"):
            raise ValueError(f"unknown coloring order {self.order!r}")
        if self.trace not in ("full", "slim", "off"):
            raise ValueError(f"unknown trace mode {self.trace!r}")


@dataclass(frozen=True)
class ConstructionTrace:
    """Audit record of one construction run.

    Holds the coloring of the square, its color classes, and the pair of
    interval realizations built for each class; ``augmented`` carries the
    per-class augmented graphs when the trace was taken in "full" mode and
    is None in "slim" mode (recompute via :func:`augmented_graph`).
    """

    graph: Graph
    coloring: VertexColoring
    classes: tuple[frozenset[int], ...]
    pairs: tuple[tuple[IntervalRealization, IntervalRealization], ...]
    augmented: tuple[Graph, ...] | None = None

    @property
    def k(self) -> int:
        return self.coloring.k


def augmented_graph(g: Graph, class_vertices: Iterable[int]) -> Graph:
    """``g`` plus all edges among the vertices outside ``class_vertices``.

    The outside vertices become a clique; edges touching the class are
    exactly those of ``g``.  Materializes O(n^2) edges, so use at graph
    sizes where that is acceptable.
    """
    vi = frozenset(class_vertices)
    for v in vi:
        if not 0 <= v < g.n:
            raise ValueError(f"class vertex {v} out of range for n={g.n}")
    outside = frozenset(range(g.n)) - vi
    adj = []
    for v in range(g.n):
        if v in vi:
            adj.append(g.adj[v])
        else:
            adj.append((outside - {v}) | g.adj[v])
    return Graph._from_adj(adj)


def class_realizations(
    g: Graph,
    class_vertices: Iterable[int],
    order: Sequence[int] | None = None,
) -> tuple[IntervalRealization, IntervalRealization]:
    """The two interval realizations that together realize the augmented graph.

    Requires ``class_vertices`` to be independent in ``g`` with no outside
    vertex adjacent to two of them (automatic for color classes of a proper
    coloring of ``square(g)``).  ``order`` fixes the left-to-right layout of
    the class vertices (default: ascending index); any order works, only
    the concrete intervals change.

    In the forward realization a class vertex at position ``p`` (1-based)
    becomes the point ``[p, p]``; the reverse realization uses position
    ``h - p + 1``.  An outside vertex spans ``[0, position of its class
    neighbor]``, or ``[0, 0]`` if it has none.  Intersecting the two edge
    sets cancels every point-to-span overlap that is not a real edge: for a
    non-adjacent class vertex u and outside vertex w with class neighbor z,
    u's point exceeds z's position in whichever realization orders u after
    z.
    """
    vi = frozenset(class_vertices)
    for v in vi:
        if not 0 <= v < g.n:
            raise ValueError(f"class vertex {v} out of range for n={g.n}")
    if order is None:
        layout = sorted(vi)
    else:
        layout = list(order)
        if len(layout) != len(vi) or set(layout) != vi:
            raise ValueError("order must be a permutation of the class vertices")

    for u in sorted(vi):
        inside = g.adj[u] & vi
        if inside:
            w = min(inside)
            raise ValueError(
                f"class is not independent: vertices {u} and {w} are adjacent"
            )

    h = len(layout)
    pos = {v: p + 1 for p, v in enumerate(layout)}
    n = g.n

    # Unique class neighbor of each outside vertex; two are a violation.
    anchor: dict[int, int] = {}
    for z in layout:
        for w in g.adj[z]:
            if w in anchor:
                raise ValueError(
                    f"vertex {w} has two neighbors in the class: "
                    f"{anchor[w]} and {z}"
                )
            anchor[w] = z

    los0 = np.zeros(n, dtype=np.int64)
    his0 = np.zeros(n, dtype=np.int64)
    los1 = np.zeros(n, dtype=np.int64)
    his1 = np.zeros(n, dtype=np.int64)
    for v in vi:
        p = pos[v]
        los0[v] = his0[v] = p
        los1[v] = his1[v] = h - p + 1
    for w, z in anchor.items():
        his0[w] = pos[z]
        his1[w] = h - pos[z] + 1
    return (
        IntervalRealization.from_arrays(los0, his0),
        IntervalRealization.from_arrays(los1, his1),
    )


def construct_box_representation(
    g: Graph, options: ConstructOptions | None = None
) -> tuple[BoxRepresentation, ConstructionTrace | None]:
    """Build a box representation of ``g`` with dimension <= 2*Delta^2 + 2.

    Works for every simple graph.  The raw dimension is twice the number of
    colors the greedy coloring uses on ``square(g)``, which is at most
    Delta^2 + 1; pruning (on by default) then drops complete and duplicate
    dimensions without changing the represented edges.
    """
    opts = options or ConstructOptions()
    g2 = square(g)
    order = smallest_last_order(g2) if opts.order == "smallest-last" else None
    coloring = greedy_color(g2, order)
    classes = tuple(color_classes(coloring))
    pairs = tuple(class_realizations(g, vi) for vi in classes)
    dims = [r for pair in pairs for r in pair]
    rep = BoxRepresentation(g.n, dims)
    if opts.prune:
        rep = prune(rep)
    if opts.trace == "off":
        return rep, None
    augmented = None
    if opts.trace == "full":
        augmented = tuple(augmented_graph(g, vi) for vi in classes)
    return rep, ConstructionTrace(g, coloring, classes, pairs, augmented)


def _class_check_dense(g: Graph, trace: ConstructionTrace) -> bool:
    n = g.n
    adj = _bitops.dense_adjacency(n, g.edge_set)
    acc = np.ones((n, n), dtype=bool)
    eye = np.eye(n, dtype=bool)
    for i, vi in enumerate(trace.classes):
        outside = np.ones(n, dtype=bool)
        outside[list(vi)] = False
        expected = (adj | np.outer(outside, outside)) & ~eye
        r0, r1 = trace.pairs[i]
        got = _bitops.dense_overlap(r0.los, r0.his) & _bitops.dense_overlap(
            r1.los, r1.his
        )
        got &= ~eye
        if not np.array_equal(got, expected):
            return False
        if trace.augmented is not None:
            stored = _bitops.dense_adjacency(n, trace.augmented[i].edge_set)
            if not np.array_equal(stored, expected):
                return False
        acc &= expected
    return np.array_equal(acc, adj)


def _class_check_packed(g: Graph, trace: ConstructionTrace) -> bool:
    n = g.n
    adj = _bitops.pack_adjacency(n, g.edge_set)
    diag = _bitops.diagonal_matrix(n)
    full = _bitops.full_matrix(n)
    acc_sep = _bitops.zero_matrix(n)  # pairs missing from some augmented graph
    for i, vi in enumerate(trace.classes):
        r0, r1 = trace.pairs[i]
        sep = _bitops.zero_matrix(n)
        _bitops.or_separation(sep, r0.los, r0.his)
        _bitops.or_separation(sep, r1.los, r1.his)
        sep = _bitops.symmetrized(sep, n)
        # augmented graph as bits: adjacency plus the outside clique
        clique = _bitops.zero_matrix(n)
        outside = np.array(sorted(set(range(n)) - vi), dtype=np.int64)
        if outside.size:
            row = np.zeros(_bitops.words(n), dtype=np.uint64)
            np.bitwise_or.at(
                row, outside >> 6, np.uint64(1) << (outside & 63).astype(np.uint64)
            )
            clique[outside] = row
        expected = (adj | clique) & ~diag
        got = (full ^ sep) & ~diag
        if not np.array_equal(got, expected):
            return False
        if trace.augmented is not None:
            stored = _bitops.pack_adjacency(n, trace.augmented[i].edge_set)
            if not np.array_equal(stored, expected):
                return False
        acc_sep |= full ^ (expected | diag)
    return np.array_equal((full ^ acc_sep) & ~diag, adj)


def pipeline_check(g: Graph, trace: ConstructionTrace) -> bool:
    """Recompute and confirm the invariants a construction trace asserts.

    Checks that the classes partition the vertices consistently with the
    coloring, that each class's realization pair intersects to exactly the
    augmented graph (the stored one too, if the trace carries them), and
    that intersecting all augmented graphs gives back ``g``.
    """
    n = g.n
    if len(trace.classes) != trace.k or len(trace.pairs) != trace.k:
        return False
    if trace.augmented is not None and len(trace.augmented) != trace.k:
        return False
    if len(trace.coloring.colors) != n:
        return False
    if tuple(color_classes(trace.coloring)) != trace.classes:
        return False
    if n == 0:
        return True
    if n <= _bitops.DENSE_LIMIT:
        return _class_check_dense(g, trace)
    return _class_check_packed(g, trace)
