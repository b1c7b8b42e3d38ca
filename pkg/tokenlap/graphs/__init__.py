from tokenlap.graphs.core import Graph, complement, connected_components
from tokenlap.graphs.families import family_from_text, family_graph, make_family
from tokenlap.graphs.graph6 import parse_graph6, write_graph6

__all__ = [
    "Graph",
    "complement",
    "connected_components",
    "family_from_text",
    "family_graph",
    "make_family",
    "parse_graph6",
    "write_graph6",
]
