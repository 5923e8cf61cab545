"""Axis-parallel box representations of graphs.

Construct explicit box representations whose dimension is bounded by
``2 * max_degree(G)**2 + 2``, verify any representation exactly against a
graph, recognize interval graphs with witnesses, and compute the exact
boxicity of small graphs by exhaustive search.
"""

from boxicity.boxes import BoxRepresentation, VerifyResult, box_edges, prune, verify
from boxicity.construction import (
    ConstructionTrace,
    ConstructOptions,
    augmented_graph,
    class_realizations,
    construct_box_representation,
    pipeline_check,
)
from boxicity.exact import (
    BudgetExceededError,
    OracleBudget,
    boxicity_at_most,
    exact_boxicity,
    interval_supergraphs,
)
from boxicity.graphs import (
    Graph,
    VertexColoring,
    cocktail_party,
    color_classes,
    complete,
    complete_multipartite,
    cycle,
    greedy_color,
    is_proper_coloring,
    max_degree,
    path,
    random_bounded_degree,
    smallest_last_order,
    square,
)
from boxicity.intervals import (
    IntervalRealization,
    interval_edges,
    is_interval_graph,
    verify_interval_representation,
)

__version__ = "0.1.0"

__all__ = [
    "BoxRepresentation",
    "BudgetExceededError",
    "ConstructOptions",
    "ConstructionTrace",
    "Graph",
    "IntervalRealization",
    "OracleBudget",
    "VertexColoring",
    "VerifyResult",
    "augmented_graph",
    "box_edges",
    "boxicity_at_most",
    "class_realizations",
    "cocktail_party",
    "color_classes",
    "complete",
    "complete_multipartite",
    "construct_box_representation",
    "cycle",
    "exact_boxicity",
    "greedy_color",
    "interval_edges",
    "interval_supergraphs",
    "is_interval_graph",
    "is_proper_coloring",
    "max_degree",
    "path",
    "pipeline_check",
    "prune",
    "random_bounded_degree",
    "smallest_last_order",
    "square",
    "verify",
    "verify_interval_representation",
]
