"""Exhaustive verification of the bipartite intrinsically knotted graphs with 23 edges."""

from .graph import (Graph, GraphError, Graph6Error, are_isomorphic, canonical_code,
                    decode_graph6, encode_graph6)
from .families import catalog, cousins
from .minors import has_minor, ik_by_catalog
from .planarity import Verdict, is_planar, prop21_classify
from .simplify import hat
from .sieve import Outcome, run_theorem, sieve_graph

__all__ = [
    "Graph", "GraphError", "Graph6Error", "are_isomorphic", "canonical_code",
    "decode_graph6", "encode_graph6", "catalog", "cousins", "has_minor", "ik_by_catalog",
    "Verdict", "is_planar", "prop21_classify", "hat", "Outcome", "run_theorem", "sieve_graph",
]
__version__ = "0.1.0"
