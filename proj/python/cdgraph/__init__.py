"""Exact spectra and structural checks for character-degree-graph families."""

from ._core import (
    Graph,
    block_decomposition,
    cocktail_party,
    complete,
    connected_components,
    diameter,
    direct_product_join,
    distance_laplacian,
    distance_laplacian_char_poly,
    distance_laplacian_spectrum,
    distances,
    full_report,
    laplacian,
    laplacian_char_poly,
    laplacian_spectrum,
    operation_d,
    parse_graph_json,
    spanning_tree_count,
    supergraph,
    two_clique_cut_vertex,
    verify_family,
    write_graph_json,
)

__all__ = [
    "Graph",
    "block_decomposition",
    "cocktail_party",
    "complete",
    "connected_components",
    "diameter",
    "direct_product_join",
    "distance_laplacian",
    "distance_laplacian_char_poly",
    "distance_laplacian_spectrum",
    "distances",
    "full_report",
    "laplacian",
    "laplacian_char_poly",
    "laplacian_spectrum",
    "operation_d",
    "parse_graph_json",
    "spanning_tree_count",
    "supergraph",
    "two_clique_cut_vertex",
    "verify_family",
    "write_graph_json",
]

__version__ = "0.1.0"
