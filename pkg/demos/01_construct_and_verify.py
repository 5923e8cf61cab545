"""Construct a box representation of a random bounded-degree graph and verify it.

The headline guarantee: the dimension never exceeds 2 * max_degree**2 + 2,
no matter how many vertices the graph has.
"""

from boxicity import (
    construct_box_representation,
    max_degree,
    random_bounded_degree,
    verify,
)

# A reproducible random graph: 500 vertices, max degree 6.
g = random_bounded_degree(500, 6, seed=42)
delta = max_degree(g)
print(f"graph: n={g.n}, m={g.m}, max degree {delta}")
print(f"dimension bound: 2 * {delta}^2 + 2 = {2 * delta**2 + 2}")

rep, trace = construct_box_representation(g)
print(f"colors used on the square: {trace.k}")
print(f"dimension after pruning:   {rep.d}")

# Every vertex now owns an axis-parallel box, one interval per dimension.
print(f"box of vertex 0: {rep.box(0)[:4]} ... ({rep.d} intervals total)")

# The verifier recomputes the represented edge set independently and
# compares it with the graph, pair by pair.
result = verify(g, rep)
print(f"verification: {'ok' if result.ok else f'FAILED at {result.pair}'}")

assert result.ok
assert rep.d <= 2 * delta**2 + 2
