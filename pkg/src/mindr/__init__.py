"""Minimum distance representatives on graphs.

Pick one vertex from each of ``k`` candidate sets so that the sum of
pairwise graph distances between the picks is as small as possible.
"""

from .baselines import pagerank, solve_degree, solve_greedy, solve_pagerank
from .evaluation import (
    batch_report,
    distance_cost,
    evaluate,
    jaccard,
    objective,
    ratio,
    summarize,
    value,
)
from .exact import (
    NotDecomposableError,
    UsefulEdge,
    find_useful_edge,
    solve_base_case,
    solve_decomposable,
)
from .graph import (
    Graph,
    biconnected_components,
    bridges,
    connected_components,
    quotient_graph,
    shortest_paths,
)
from .heuristics import (
    group_overlapping_sets,
    hitting_distance,
    reduce_to_decomposable,
    solve_hitting,
    solve_spanning_tree,
)
from .instance import (
    Instance,
    ParseError,
    Solution,
    connect_maximal,
    connect_minimal,
    parse_instance,
    preprocess_graph,
    serialize_instance,
    validate,
)
from .oracle import (
    MaxCrsInstance,
    check_reduction_equivalence,
    naive_useful_edges,
    reduce_to_mindir,
    solve_bruteforce,
)

__version__ = "0.1.0"

__all__ = [
    "batch_report",
    "biconnected_components",
    "bridges",
    "check_reduction_equivalence",
    "connect_maximal",
    "connect_minimal",
    "connected_components",
    "distance_cost",
    "evaluate",
    "find_useful_edge",
    "Graph",
    "group_overlapping_sets",
    "hitting_distance",
    "Instance",
    "jaccard",
    "MaxCrsInstance",
    "naive_useful_edges",
    "NotDecomposableError",
    "objective",
    "pagerank",
    "parse_instance",
    "ParseError",
    "preprocess_graph",
    "quotient_graph",
    "ratio",
    "reduce_to_decomposable",
    "reduce_to_mindir",
    "serialize_instance",
    "shortest_paths",
    "Solution",
    "solve_base_case",
    "solve_bruteforce",
    "solve_decomposable",
    "solve_degree",
    "solve_greedy",
    "solve_hitting",
    "solve_pagerank",
    "solve_spanning_tree",
    "summarize",
    "UsefulEdge",
    "validate",
    "value",
]
