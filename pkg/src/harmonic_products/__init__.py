"""Exact harmonic centrality and centralization of graphs and graph products."""

from .centrality import (
    CentralityReport,
    DegenerateGraphError,
    centrality_profile,
    centralization,
    centralization_from_values,
    harmonic_centrality,
    reciprocal_sum,
)
from .families import FamilySpec, generate
from .graph import UNREACHABLE, Graph, GraphError, bfs_distances, from_edge_list
from .numeric import Rational, format_rational, harmonic_number, parse_rational
from .products import ProductGraph, cartesian_product, direct_product

__version__ = "0.1.0"

__all__ = [
    "CentralityReport",
    "DegenerateGraphError",
    "FamilySpec",
    "Graph",
    "GraphError",
    "ProductGraph",
    "Rational",
    "UNREACHABLE",
    "bfs_distances",
    "cartesian_product",
    "centrality_profile",
    "centralization",
    "centralization_from_values",
    "direct_product",
    "format_rational",
    "from_edge_list",
    "generate",
    "harmonic_centrality",
    "harmonic_number",
    "parse_rational",
    "reciprocal_sum",
]
