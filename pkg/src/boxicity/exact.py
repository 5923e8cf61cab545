"""Exact boxicity for small graphs by exhaustive search.

Boxicity equals the minimum number of interval graphs on the same vertex
set, each containing all input edges, whose edge sets intersect to exactly
the input.  Equivalently: every non-edge must be dropped by at least one
interval supergraph, which turns the problem into a minimum set cover over
the non-edges.  The oracle enumerates all interval supergraphs, then runs
iterative-deepening cover search with fail-first branching and memoization
on the uncovered set.

Everything here is exponential and budget-guarded; it exists as ground
truth for desk-sized graphs, not as an algorithm that scales.
"""

from __future__ import annotations

from dataclasses import dataclass

from boxicity.graphs import Edge, Graph
from boxicity.intervals import IntervalRealization, is_interval_graph

__all__ = [
    "OracleBudget",
    "BudgetExceededError",
    "interval_supergraphs",
    "exact_boxicity",
    "boxicity_at_most",
]


@dataclass(frozen=True)
class OracleBudget:
    """Hard limits for the exhaustive search.

    ``max_n`` caps the vertex count, ``max_k`` the search depth, and
    ``max_supergraphs`` the number of candidate edge supersets enumerated
    (``2 ** non_edges``).  Exceeding any limit raises
    :class:`BudgetExceededError`; a budget overrun is never silently
    reported as a value.
    """

    max_n: int = 8
    max_k: int = 8
    max_supergraphs: int = 1 << 18

    def __post_init__(self) -> None:
        if self.max_n < 1 or self.max_k < 1 or self.max_supergraphs < 1:
            raise ValueError("all budget limits must be positive")


class BudgetExceededError(RuntimeError):
    """The search would exceed its configured budget."""


# Intervality of small graphs, keyed by (n, edge bitmask).  Values are
# (is_interval, witness endpoint pairs or None).  Shared across calls; the
# same supersets recur constantly when sweeping graph corpora.
_interval_cache: dict[tuple[int, int], tuple[bool, tuple[tuple[int, int], ...] | None]] = {}


def _all_pairs(n: int) -> list[Edge]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _edge_mask(pairs: list[Edge], index: dict[Edge, int], edges) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << index[e]
    return mask


def _interval_with_witness(
    n: int, mask: int, pairs: list[Edge], max_n: int
) -> tuple[bool, tuple[tuple[int, int], ...] | None]:
    key = (n, mask)
    hit = _interval_cache.get(key)
    if hit is not None:
        return hit
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    ok, witness = is_interval_graph(Graph(n, edges), max_n=max_n)
    result = (ok, tuple(witness.pairs()) if ok else None)
    _interval_cache[key] = result
    return result


def _check_budget(g: Graph, budget: OracleBudget) -> list[Edge]:
    if g.n > budget.max_n:
        raise BudgetExceededError(
            f"graph has {g.n} vertices, budget allows {budget.max_n}"
        )
    pairs = _all_pairs(g.n)
    non_edges = [e for e in pairs if e not in g.edge_set]
    if len(non_edges) < 64 and (1 << len(non_edges)) > budget.max_supergraphs:
        raise BudgetExceededError(
            f"{1 << len(non_edges)} candidate supergraphs exceed the cap "
            f"of {budget.max_supergraphs}"
        )
    if len(non_edges) >= 64:
        raise BudgetExceededError("too many non-edges to enumerate")
    return non_edges


def _enumerate_supergraphs(
    g: Graph, budget: OracleBudget
) -> tuple[list[Edge], list[tuple[int, tuple[tuple[int, int], ...]]]]:
    """All interval supergraphs of ``g``.

    Returns the non-edge list and, per interval supergraph, the bitmask of
    non-edges it leaves out (over that list) plus its interval witness.
    """
    non_edges = _check_budget(g, budget)
    n = g.n
    pairs = _all_pairs(n)
    index = {e: i for i, e in enumerate(pairs)}
    base = _edge_mask(pairs, index, g.edge_set)
    add_bits = [1 << index[e] for e in non_edges]
    found: list[tuple[int, tuple[tuple[int, int], ...]]] = []
    for subset in range(1 << len(non_edges)):
        mask = base
        rest = subset
        while rest:
            low = rest & -rest
            mask |= add_bits[low.bit_length() - 1]
            rest ^= low
        ok, witness = _interval_with_witness(n, mask, pairs, budget.max_n)
        if ok:
            # bits of non_edges NOT in this supergraph = what it can rule out
            uncover = 0
            for i, e in enumerate(non_edges):
                if not mask >> index[e] & 1:
                    uncover |= 1 << i
            found.append((uncover, witness))
    return non_edges, found


def interval_supergraphs(
    g: Graph, budget: OracleBudget | None = None
) -> list[frozenset[Edge]]:
    """Every interval graph on ``V(g)`` whose edges contain ``E(g)``.

    Deterministic order: ascending edge count, then lexicographic edge
    list.  Subject to the budget caps.
    """
    budget = budget or OracleBudget()
    non_edges = _check_budget(g, budget)
    n = g.n
    pairs = _all_pairs(n)
    index = {e: i for i, e in enumerate(pairs)}
    base = frozenset(g.edge_set)
    out: list[frozenset[Edge]] = []
    for subset in range(1 << len(non_edges)):
        extra = [non_edges[i] for i in range(len(non_edges)) if subset >> i & 1]
        edges = base | frozenset(extra)
        mask = _edge_mask(pairs, index, edges)
        ok, _ = _interval_with_witness(n, mask, pairs, budget.max_n)
        if ok:
            out.append(edges)
    out.sort(key=lambda f: (len(f), tuple(sorted(f))))
    return out


def _cover_search(
    non_edges: list[Edge],
    supergraphs: list[tuple[int, tuple[tuple[int, int], ...]]],
    k: int,
) -> list[tuple[tuple[int, int], ...]] | None:
    """Find <= k supergraphs whose left-out non-edges cover all of them."""
    universe = (1 << len(non_edges)) - 1
    if universe == 0:
        return []
    # Distinct coverage masks only; the concrete witness does not matter to
    # the search, so keep the first supergraph seen per mask.
    by_mask: dict[int, tuple[tuple[int, int], ...]] = {}
    for uncover, witness in supergraphs:
        if uncover and uncover not in by_mask:
            by_mask[uncover] = witness
    masks = sorted(by_mask)
    covers: list[list[int]] = [[] for _ in non_edges]
    for mask in masks:
        rest = mask
        while rest:
            low = rest & -rest
            covers[low.bit_length() - 1].append(mask)
            rest ^= low
    if any(not c for c in covers):
        return None
    failed: dict[int, int] = {}

    def search(uncovered: int, depth: int) -> list[int] | None:
        if uncovered == 0:
            return []
        if depth == 0:
            return None
        if failed.get(uncovered, 0) >= depth:
            return None
        # fail-first: branch on the non-edge with the fewest candidates
        best = -1
        rest = uncovered
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if best < 0 or len(covers[i]) < len(covers[best]):
                best = i
            rest ^= low
        for mask in covers[best]:
            sub = search(uncovered & ~mask, depth - 1)
            if sub is not None:
                return [mask] + sub
        failed[uncovered] = depth
        return None

    chosen = search(universe, k)
    if chosen is None:
        return None
    return [by_mask[m] for m in chosen]


def boxicity_at_most(
    g: Graph, k: int, budget: OracleBudget | None = None
) -> tuple[bool, list[IntervalRealization] | None]:
    """Decide ``box(g) <= k``; on True, also return a verifying witness.

    The witness is a list of at most ``k`` interval realizations whose
    interval graphs all contain ``E(g)`` and intersect to exactly ``E(g)``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    budget = budget or OracleBudget()
    if g.n > budget.max_n:
        raise BudgetExceededError(
            f"graph has {g.n} vertices, budget allows {budget.max_n}"
        )
    if g.is_complete():
        return True, []
    if k == 0:
        return False, None
    non_edges, supergraphs = _enumerate_supergraphs(g, budget)
    witnesses = _cover_search(non_edges, supergraphs, k)
    if witnesses is None:
        return False, None
    return True, [IntervalRealization(w) for w in witnesses]


def exact_boxicity(
    g: Graph, budget: OracleBudget | None = None
) -> tuple[int, list[IntervalRealization]]:
    """Smallest ``k`` with an interval-graph representation of size ``k``.

    Complete graphs give 0 (the empty intersection convention).  Raises
    :class:`BudgetExceededError` if no representation within ``max_k`` is
    found, which cannot happen for ``max_k >= n // 2``.
    """
    budget = budget or OracleBudget()
    if g.n > budget.max_n:
        raise BudgetExceededError(
            f"graph has {g.n} vertices, budget allows {budget.max_n}"
        )
    if g.is_complete():
        return 0, []
    non_edges, supergraphs = _enumerate_supergraphs(g, budget)
    for k in range(1, budget.max_k + 1):
        witnesses = _cover_search(non_edges, supergraphs, k)
        if witnesses is not None:
            return k, [IntervalRealization(w) for w in witnesses]
    raise BudgetExceededError(
        f"no representation of size <= max_k={budget.max_k} found"
    )
