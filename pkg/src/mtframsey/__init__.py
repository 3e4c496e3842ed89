"""Maximal triangle-free graph generation and triangle Ramsey numbers R(K3, G)."""

from __future__ import annotations

from .canon import canonical_form
from .driver import all_ramsey_graphs, classify_all, ramsey_number, verify_ramsey_graph
from .family import parse_graph
from .graph import Graph, complement, contains_subgraph, is_mtf, is_triangle_free
from .mtfgen import generate_mtf, mtf_graphs

__all__ = [
    "Graph",
    "all_ramsey_graphs",
    "canonical_form",
    "classify_all",
    "complement",
    "contains_subgraph",
    "generate_mtf",
    "is_mtf",
    "is_triangle_free",
    "mtf_graphs",
    "parse_graph",
    "ramsey_number",
    "verify_ramsey_graph",
]

__version__ = "0.1.0"
