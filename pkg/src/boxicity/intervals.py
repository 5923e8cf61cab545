"""Closed integer intervals per vertex: realizations, recognition, verification.

An :class:`IntervalRealization` assigns every vertex a closed interval
``[lo, hi]`` with integer endpoints and thereby defines one interval graph
on those vertices.  Integer endpoints keep every check here bit-exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from boxicity import _bitops
from boxicity.graphs import Edge, Graph

__all__ = [
    "IntervalRealization",
    "interval_edges",
    "is_interval_graph",
    "verify_interval_representation",
]

RECOGNITION_LIMIT = 12


class IntervalRealization:
    """One closed interval ``[lo, hi]`` per vertex, integer endpoints.

    Backed by read-only int64 arrays ``los`` and ``his``; equality and
    hashing are structural (same endpoints, vertex by vertex).
    """

    __slots__ = ("_los", "_his")

    def __init__(self, intervals: Iterable[tuple[int, int]]) -> None:
        pairs = list(intervals)
        los = np.array([p[0] for p in pairs], dtype=np.int64)
        his = np.array([p[1] for p in pairs], dtype=np.int64)
        self._init_arrays(los, his)

    @classmethod
    def from_arrays(cls, los: np.ndarray, his: np.ndarray) -> "IntervalRealization":
        r = cls.__new__(cls)
        r._init_arrays(
            np.asarray(los, dtype=np.int64).copy(),
            np.asarray(his, dtype=np.int64).copy(),
        )
        return r

    def _init_arrays(self, los: np.ndarray, his: np.ndarray) -> None:
        if los.shape != his.shape or los.ndim != 1:
            raise ValueError("los and his must be 1-d arrays of equal length")
        if np.any(los > his):
            v = int(np.nonzero(los > his)[0][0])
            raise ValueError(f"vertex {v}: lo {int(los[v])} exceeds hi {int(his[v])}")
        los.setflags(write=False)
        his.setflags(write=False)
        self._los = los
        self._his = his

    @property
    def n(self) -> int:
        return self._los.shape[0]

    @property
    def los(self) -> np.ndarray:
        return self._los

    @property
    def his(self) -> np.ndarray:
        return self._his

    def interval(self, v: int) -> tuple[int, int]:
        return (int(self._los[v]), int(self._his[v]))

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in zip(self._los, self._his)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalRealization):
            return NotImplemented
        return np.array_equal(self._los, other._los) and np.array_equal(
            self._his, other._his
        )

    def __hash__(self) -> int:
        return hash((self._los.tobytes(), self._his.tobytes()))

    def __repr__(self) -> str:
        return f"IntervalRealization({self.pairs()!r})"


def interval_edges(r: IntervalRealization) -> set[Edge]:
    """Edge set of the interval graph defined by ``r``.

    Closed-interval semantics: ``{u, v}`` is an edge iff
    ``max(lo_u, lo_v) <= min(hi_u, hi_v)``, so touching endpoints intersect.
    Output-sensitive sweep; intended for graph-sized inputs, not the packed
    paths used by the verifiers.
    """
    n = r.n
    order = sorted(range(n), key=lambda v: int(r.los[v]))
    los, his = r.los, r.his
    out: set[Edge] = set()
    for i in range(n):
        u = order[i]
        hi_u = his[u]
        for j in range(i + 1, n):
            v = order[j]
            if los[v] > hi_u:
                break
            out.add((u, v) if u < v else (v, u))
    return out


def _maximal_cliques(g: Graph, limit: int) -> list[frozenset[int]] | None:
    """Pivoted Bron-Kerbosch; gives up (None) once more than ``limit`` cliques appear.

    Interval graphs have at most n maximal cliques, so the early abort both
    bounds the later ordering search and doubles as a fast negative answer.
    """
    cliques: list[frozenset[int]] = []
    adj = g.adj

    def expand(r: set[int], p: set[int], x: set[int]) -> bool:
        if not p and not x:
            cliques.append(frozenset(r))
            return len(cliques) <= limit
        pivot = max(p | x, key=lambda w: len(adj[w] & p))
        for v in sorted(p - adj[pivot]):
            if not expand(r | {v}, p & adj[v], x & adj[v]):
                return False
            p.remove(v)
            x.add(v)
        return True

    if not expand(set(), set(range(g.n)), set()):
        return None
    return cliques


def _consecutive_order(cliques: list[frozenset[int]]) -> list[int] | None:
    """Order clique indices so every vertex's cliques sit consecutively.

    Backtracking with two prunes: a clique may only follow if it contains
    every currently "open" vertex (one with cliques both placed and
    pending), and remainders that already failed are memoized.
    """
    t = len(cliques)
    count: dict[int, int] = {}
    for c in cliques:
        for v in c:
            count[v] = count.get(v, 0) + 1
    remaining_count = dict(count)
    failed: set[frozenset[int]] = set()
    order: list[int] = []
    remaining = set(range(t))
    open_vertices: set[int] = set()

    def place() -> bool:
        if not remaining:
            return True
        key = frozenset(remaining)
        if key in failed:
            return False
        for i in sorted(remaining):
            c = cliques[i]
            if open_vertices and not open_vertices <= c:
                continue
            newly_open = []
            newly_closed = []
            for v in c:
                remaining_count[v] -= 1
                if remaining_count[v] == 0:
                    if v in open_vertices:
                        open_vertices.remove(v)
                        newly_closed.append(v)
                else:
                    if count[v] != remaining_count[v] + 1:
                        continue  # already open, stays open
                    open_vertices.add(v)
                    newly_open.append(v)
            remaining.remove(i)
            order.append(i)
            if place():
                return True
            order.pop()
            remaining.add(i)
            for v in c:
                remaining_count[v] += 1
            for v in newly_open:
                open_vertices.remove(v)
            for v in newly_closed:
                open_vertices.add(v)
        failed.add(key)
        return False

    return order if place() else None


def is_interval_graph(
    g: Graph, max_n: int = RECOGNITION_LIMIT
) -> tuple[bool, IntervalRealization | None]:
    """Recognize interval graphs and produce a realizing witness.

    Enumerates the maximal cliques and searches for a linear order making
    each vertex's cliques consecutive; the witness assigns vertex ``v`` the
    interval from the first to the last clique position containing it, so
    ``interval_edges(witness) == g.edge_set`` whenever the answer is True.

    Exponential in the clique count: this is an oracle for small graphs,
    guarded by ``max_n``.
    """
    if g.n > max_n:
        raise ValueError(f"recognition limited to n <= {max_n} (got n={g.n})")
    if g.n == 0:
        return True, IntervalRealization([])
    cliques = _maximal_cliques(g, limit=g.n)
    if cliques is None:
        return False, None
    order = _consecutive_order(cliques)
    if order is None:
        return False, None
    position = {ci: p + 1 for p, ci in enumerate(order)}
    first = [0] * g.n
    last = [0] * g.n
    for ci, c in enumerate(cliques):
        p = position[ci]
        for v in c:
            if first[v] == 0 or p < first[v]:
                first[v] = p
            if p > last[v]:
                last[v] = p
    return True, IntervalRealization(list(zip(first, last)))


def verify_interval_representation(
    g: Graph, realizations: Sequence[IntervalRealization]
) -> tuple[bool, Edge | None]:
    """Check ``E(g) == intersection of interval_edges(r) over realizations``.

    The empty intersection is the complete edge set, so an empty list
    verifies exactly the complete graphs.  On failure the second component
    is the lexicographically smallest mismatched pair.
    """
    for r in realizations:
        if r.n != g.n:
            raise ValueError(
                f"realization covers {r.n} vertices, graph has {g.n}"
            )
    n = g.n
    if n == 0:
        return True, None
    if n <= _bitops.DENSE_LIMIT:
        adj = _bitops.dense_adjacency(n, g.edge_set)
        return _bitops.check_realizations_dense(adj, n, realizations)
    adj = _bitops.pack_adjacency(n, g.edge_set)
    return _bitops.check_realizations(adj, n, realizations)
