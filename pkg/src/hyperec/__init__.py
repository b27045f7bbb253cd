"""Eigenvector centrality for non-uniform hypergraphs."""

from .analysis import (
    AttackCurve,
    CorrelationMatrix,
    attack_curve,
    correlation_matrix,
    jaccard,
    pearson,
    random_attack_curve,
    ranked_list,
    top_k,
)
from .centrality import (
    METHODS,
    CentralityVector,
    Graph,
    cc_centrality,
    clique_expansion,
    compute,
    degree_centrality,
    hec,
    hyperdegree_centrality,
    line_graph,
    normalize_to_unit_p_norm,
    vc_centrality,
)
from .hypergraph import (
    Hypergraph,
    HypergraphStats,
    ParseError,
    filter_sizes,
    is_connected,
    largest_component,
    neighbors,
    parse_hyperedge_list,
    read_hyperedge_list,
    remove_vertices,
    serialize,
    stats,
)
from .solver import DisconnectedError, EigenPair, SolverOptions, residual, zqw_solve
from .tensor import apply_adjacency, coefficient, dense_apply, materialize_dense

__version__ = "0.1.0"

__all__ = [
    "AttackCurve",
    "CorrelationMatrix",
    "attack_curve",
    "correlation_matrix",
    "jaccard",
    "pearson",
    "random_attack_curve",
    "ranked_list",
    "top_k",
    "METHODS",
    "CentralityVector",
    "Graph",
    "cc_centrality",
    "clique_expansion",
    "compute",
    "degree_centrality",
    "hec",
    "hyperdegree_centrality",
    "line_graph",
    "normalize_to_unit_p_norm",
    "vc_centrality",
    "Hypergraph",
    "HypergraphStats",
    "ParseError",
    "filter_sizes",
    "is_connected",
    "largest_component",
    "neighbors",
    "parse_hyperedge_list",
    "read_hyperedge_list",
    "remove_vertices",
    "serialize",
    "stats",
    "DisconnectedError",
    "EigenPair",
    "SolverOptions",
    "residual",
    "zqw_solve",
    "apply_adjacency",
    "coefficient",
    "dense_apply",
    "materialize_dense",
]
