"""d-dimensional axis-parallel box representations: evaluate, verify, prune.

A box representation assigns every vertex a Cartesian product of ``d``
closed intervals, one interval realization per dimension.  Two boxes
intersect iff their intervals overlap in every dimension, so the edge set
represented is the intersection of the per-dimension interval graphs; with
``d = 0`` the empty intersection is the complete graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from boxicity import _bitops
from boxicity.graphs import Edge, Graph
from boxicity.intervals import IntervalRealization, interval_edges

__all__ = ["BoxRepresentation", "VerifyResult", "box_edges", "verify", "prune"]


class BoxRepresentation:
    """``d`` interval realizations over one shared vertex set."""

    __slots__ = ("_n", "_dims")

    def __init__(self, n: int, dims: Sequence[IntervalRealization] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        dims = tuple(dims)
        for j, r in enumerate(dims):
            if r.n != n:
                raise ValueError(
                    f"dimension {j} covers {r.n} vertices, expected {n}"
                )
        self._n = n
        self._dims = dims

    @property
    def n(self) -> int:
        return self._n

    @property
    def d(self) -> int:
        return len(self._dims)

    @property
    def dims(self) -> tuple[IntervalRealization, ...]:
        return self._dims

    def box(self, v: int) -> list[tuple[int, int]]:
        """The box of vertex ``v`` as its per-dimension intervals."""
        return [r.interval(v) for r in self._dims]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoxRepresentation):
            return NotImplemented
        return self._n == other._n and self._dims == other._dims

    def __hash__(self) -> int:
        return hash((self._n, self._dims))

    def __repr__(self) -> str:
        return f"BoxRepresentation(n={self._n}, d={self.d})"


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of :func:`verify`; truthy iff the representation matches.

    On failure ``pair`` is the lexicographically smallest mismatched pair
    and ``per_dimension`` records, per dimension, whether that pair's
    intervals overlap there.
    """

    ok: bool
    pair: Edge | None = None
    per_dimension: tuple[bool, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def box_edges(b: BoxRepresentation) -> set[Edge]:
    """Edge set represented by ``b``: pairs whose boxes intersect.

    Materializes the set, so complete-ish dimensions cost O(n^2); meant for
    graph-sized representations (use :func:`verify` for large instances).
    """
    n = b.n
    if b.d == 0:
        return {(u, v) for u in range(n) for v in range(u + 1, n)}
    out = interval_edges(b.dims[0])
    for r in b.dims[1:]:
        los, his = r.los, r.his
        out = {
            (u, v)
            for u, v in out
            if max(los[u], los[v]) <= min(his[u], his[v])
        }
    return out


def verify(g: Graph, b: BoxRepresentation) -> VerifyResult:
    """Check that ``b`` represents exactly the edges of ``g``.

    Runs in O(d * (n log n + n^2/64)) via packed separation bitsets (dense
    boolean matrices below a size threshold), independent of however ``b``
    was produced.
    """
    if b.n != g.n:
        raise ValueError(f"representation covers {b.n} vertices, graph has {g.n}")
    n = g.n
    if n == 0:
        return VerifyResult(True)
    if n <= _bitops.DENSE_LIMIT:
        adj = _bitops.dense_adjacency(n, g.edge_set)
        ok, pair = _bitops.check_realizations_dense(adj, n, b.dims)
    else:
        adj = _bitops.pack_adjacency(n, g.edge_set)
        ok, pair = _bitops.check_realizations(adj, n, b.dims)
    if ok:
        return VerifyResult(True)
    u, v = pair
    status = tuple(
        bool(max(r.los[u], r.los[v]) <= min(r.his[u], r.his[v])) for r in b.dims
    )
    return VerifyResult(False, pair, status)


def _is_complete_dimension(r: IntervalRealization) -> bool:
    # Intervals have the Helly property: pairwise overlap iff a common point.
    if r.n <= 1:
        return True
    return int(r.los.max()) <= int(r.his.min())


def prune(b: BoxRepresentation) -> BoxRepresentation:
    """Drop dimensions that cannot change the represented edge set.

    Removes every dimension whose interval graph is complete, then
    structural duplicates (identical endpoints vertex by vertex).  The
    result represents the same edges and never has more dimensions;
    idempotent.
    """
    keep: list[IntervalRealization] = []
    seen: set[tuple[bytes, bytes]] = set()
    for r in b.dims:
        if _is_complete_dimension(r):
            continue
        key = (r.los.tobytes(), r.his.tobytes())
        if key in seen:
            continue
        seen.add(key)
        keep.append(r)
    return BoxRepresentation(b.n, keep)
