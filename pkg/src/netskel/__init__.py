"""netskel: search information, path-diversity-preserving tree-contraction,
and skeleton-based scaling estimates for undirected simple graphs."""

from .contraction import (
    ContractionSample,
    MinimizeResult,
    SimplifiedNetwork,
    SimplifiedSearchInfo,
    SuperNode,
    minimize_h_simp,
    order_links_degree,
    order_links_random,
    simplified_search_information,
    supernode_tree,
    tree_contract,
)
from .errors import (
    ConnectivityError,
    DegenerateFitError,
    NetskelError,
    ParseError,
    UnreachableError,
    ValidationError,
)
from .estimator import (
    PowerLawFit,
    ScalingConstants,
    SkeletonEstimate,
    approx_h_tree,
    estimate_h_from_skeleton,
    fit_power_law,
    relative_error,
    skeleton_estimate,
)
from .generators import (
    TreeScalingRow,
    gen_chain,
    gen_random_tree,
    gen_ring,
    rewire_degree_preserving,
    tree_scaling_experiment,
)
from .graph import (
    Graph,
    Partition,
    connected_components,
    cyclomatic_number,
    is_connected,
    load_edge_list,
    load_partition,
    quotient_graph,
    to_dot,
    write_edge_list,
)
from .searchinfo import (
    SearchInfoReport,
    ShortestPathDag,
    chain_search_information,
    pair_search_information,
    ring_min_simplified_H,
    shortest_path_dag,
    total_search_information,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectivityError",
    "ContractionSample",
    "DegenerateFitError",
    "Graph",
    "MinimizeResult",
    "NetskelError",
    "ParseError",
    "Partition",
    "PowerLawFit",
    "ScalingConstants",
    "SearchInfoReport",
    "ShortestPathDag",
    "SimplifiedNetwork",
    "SimplifiedSearchInfo",
    "SkeletonEstimate",
    "SuperNode",
    "TreeScalingRow",
    "UnreachableError",
    "ValidationError",
    "approx_h_tree",
    "chain_search_information",
    "connected_components",
    "cyclomatic_number",
    "estimate_h_from_skeleton",
    "fit_power_law",
    "gen_chain",
    "gen_random_tree",
    "gen_ring",
    "is_connected",
    "load_edge_list",
    "load_partition",
    "minimize_h_simp",
    "order_links_degree",
    "order_links_random",
    "pair_search_information",
    "quotient_graph",
    "relative_error",
    "rewire_degree_preserving",
    "ring_min_simplified_H",
    "shortest_path_dag",
    "simplified_search_information",
    "skeleton_estimate",
    "supernode_tree",
    "to_dot",
    "total_search_information",
    "tree_contract",
    "tree_scaling_experiment",
    "write_edge_list",
]
