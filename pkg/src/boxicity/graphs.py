"""Simple undirected graphs and the coloring/power primitives built on them.

Vertices are always the integers ``0..n-1``.  Graphs are immutable after
construction and safe to share between threads; every function in this
module is pure.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Graph",
    "VertexColoring",
    "max_degree",
    "square",
    "greedy_color",
    "smallest_last_order",
    "color_classes",
    "is_proper_coloring",
    "path",
    "cycle",
    "complete",
    "complete_multipartite",
    "cocktail_party",
    "random_bounded_degree",
]


class Graph:
    """A simple undirected graph stored as per-vertex neighbor sets.

    No self-loops, no parallel edges; adjacency is kept symmetric by
    construction.  ``adj`` is a tuple of frozensets, so instances are
    hashable and comparisons are structural.
    """

    __slots__ = ("_n", "_adj", "_edge_set", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._edge_set: frozenset[Edge] | None = None
        self._hash: int | None = None

    @classmethod
    def _from_adj(cls, adj: Sequence[frozenset[int]]) -> "Graph":
        # Trusted path for internally built, already-symmetric adjacency.
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(adj)
        g._edge_set = None
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def m(self) -> int:
        return len(self.edge_set)

    @property
    def edge_set(self) -> frozenset[Edge]:
        if self._edge_set is None:
            self._edge_set = frozenset(
                (u, v) for u in range(self._n) for v in self._adj[u] if u < v
            )
        return self._edge_set

    def edges(self) -> list[Edge]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted(self.edge_set)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def is_complete(self) -> bool:
        return all(len(s) == self._n - 1 for s in self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class VertexColoring:
    """A vertex coloring with colors ``1..k``, every color used at least once.

    Properness is a property relative to a graph; use
    :func:`is_proper_coloring` to check it.
    """

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be non-negative")
        used = set(self.colors)
        if self.colors and (min(used) < 1 or max(used) > self.k):
            raise ValueError("colors must lie in 1..k")
        if used != set(range(1, self.k + 1)):
            raise ValueError("every color in 1..k must be used")


def max_degree(g: Graph) -> int:
    """Largest vertex degree; 0 for graphs without edges."""
    return max((len(s) for s in g.adj), default=0)


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining pairs at distance 1 or 2 in ``g``."""
    adj2 = []
    for v in range(g.n):
        reach = set(g.adj[v])
        for u in g.adj[v]:
            reach |= g.adj[u]
        reach.discard(v)
        adj2.append(frozenset(reach))
    return Graph._from_adj(adj2)


def greedy_color(g: Graph, order: Sequence[int] | None = None) -> VertexColoring:
    """First-fit coloring along ``order`` (default: ascending vertex index).

    Each vertex gets the smallest color not used by an already-colored
    neighbor, so at most ``max_degree(g) + 1`` colors are ever used and the
    result is fully determined by ``order``.
    """
    n = g.n
    if order is None:
        order = range(n)
    else:
        if len(order) != n or set(order) != set(range(n)):
            raise ValueError("order must be a permutation of 0..n-1")
    colors = [0] * n
    for v in order:
        used = {colors[u] for u in g.adj[v] if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return VertexColoring(tuple(colors), max(colors, default=0))


def smallest_last_order(g: Graph) -> list[int]:
    """Degeneracy ordering: reverse of repeated minimum-degree removal.

    Ties break toward the smaller vertex index, so the result is
    deterministic.  Feeding this order to :func:`greedy_color` tends to use
    fewer colors than index order.
    """
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    removed = [False] * n
    heap: list[tuple[int, int]] = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removal: list[int] = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        removal.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    removal.reverse()
    return removal


def is_proper_coloring(g: Graph, coloring: VertexColoring) -> bool:
    """True iff adjacent vertices always have distinct colors."""
    if len(coloring.colors) != g.n:
        return False
    c = coloring.colors
    return all(c[u] != c[v] for u, v in g.edge_set)


def color_classes(coloring: VertexColoring) -> list[frozenset[int]]:
    """Partition of the vertices by color, indexed ``0..k-1`` for colors ``1..k``."""
    classes: list[set[int]] = [set() for _ in range(coloring.k)]
    for v, c in enumerate(coloring.colors):
        classes[c - 1].add(v)
    return [frozenset(s) for s in classes]


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    """Path on ``n >= 1`` vertices."""
    if n < 1:
        raise ValueError("path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices."""
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph on ``n`` vertices."""
    if n < 0:
        raise ValueError("complete requires n >= 0")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with parts of the given sizes.

    Vertices are numbered part by part; two vertices are adjacent exactly
    when they lie in different parts.
    """
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if any(s < 1 for s in sizes):
        raise ValueError("every part size must be positive")
    n = sum(sizes)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]
    ]
    return Graph(n, edges)


def cocktail_party(k: int) -> Graph:
    """Complete k-partite graph with all parts of size 2 (K_{k x 2}).

    Has ``2k`` vertices, ``2k(k-1)`` edges and maximum degree ``2k - 2``;
    its boxicity is exactly ``k``, which makes the family a stress test for
    any dimension bound stated in terms of the maximum degree.
    """
    if k < 1:
        raise ValueError("cocktail_party requires k >= 1")
    return complete_multipartite([2] * k)


def random_bounded_degree(n: int, dmax: int, seed: int) -> Graph:
    """Random graph with maximum degree at most ``dmax``, reproducible per seed.

    The generator is fixed as part of the interface: a Mersenne-Twister
    ``random.Random(seed)`` draws ``2 * n * dmax`` candidate pairs
    ``(randrange(n), randrange(n))`` in sequence, and a candidate edge is
    inserted unless it is a loop, already present, or would push either
    endpoint above ``dmax``.  Identical arguments always yield the identical
    edge set.
    """
    if n < 1:
        raise ValueError("random_bounded_degree requires n >= 1")
    if dmax < 0:
        raise ValueError("dmax must be non-negative")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for _ in range(2 * n * dmax):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or v in adj[u]:
            continue
        if len(adj[u]) >= dmax or len(adj[v]) >= dmax:
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph._from_adj([frozenset(s) for s in adj])
