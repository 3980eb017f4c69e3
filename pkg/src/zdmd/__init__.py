"""Metric dimension of zero-divisor graphs of Z_n and their barycentric subdivisions."""

__version__ = "0.1.0"

from .graph import (Graph, GraphError, barycentric_subdivision, bfs_all_pairs, from_edge_list,
                    tree_metric_dimension)
from .ring import zero_divisor_graph, zero_divisors
from .resolving import (DimensionReport, InfeasibleError, equidistant_family_bound,
                        independent_min_resolving, is_resolving, min_resolving_bnb,
                        min_resolving_exhaustive)
from .constructions import build_labeled_bs, landmark_set, predicted_dimension, regime

__all__ = [
    "Graph", "GraphError", "barycentric_subdivision", "bfs_all_pairs", "from_edge_list",
    "tree_metric_dimension", "zero_divisor_graph", "zero_divisors", "DimensionReport",
    "InfeasibleError", "equidistant_family_bound", "independent_min_resolving", "is_resolving",
    "min_resolving_bnb", "min_resolving_exhaustive", "build_labeled_bs", "landmark_set",
    "predicted_dimension", "regime",
]
