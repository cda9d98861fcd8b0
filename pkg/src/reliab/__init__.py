"""Exact all-terminal reliability, weighted Tutte evaluation and graph inflation gadgets."""

from fractions import Fraction

from reliab.config import Caps, CapExceededError, default_caps
from reliab.graph import Edge, Graph, GraphFormatError, TwoTerminalGraph, parse_graph, serialize_graph
from reliab.poly import UniPoly, lagrange_interpolate, zpoly_to_relpoly

__all__ = [
    "Caps",
    "CapExceededError",
    "Edge",
    "Fraction",
    "Graph",
    "GraphFormatError",
    "TwoTerminalGraph",
    "UniPoly",
    "default_caps",
    "lagrange_interpolate",
    "parse_graph",
    "serialize_graph",
    "zpoly_to_relpoly",
]

__version__ = "0.1.0"
