__version__ = "0.3.0"

from tokenlap.graphs import Graph, family_graph, parse_graph6, write_graph6  # noqa: E402
from tokenlap.identities import run_identities  # noqa: E402
from tokenlap.scan import run_identity_suite, scan_conjecture  # noqa: E402
from tokenlap.spectral import (  # noqa: E402
    algebraic_connectivity,
    closed_form_spectrum,
    pairing_decomposition,
    spectrum_of,
)
from tokenlap.tokens import token_graph  # noqa: E402

__all__ = [
    "Graph",
    "algebraic_connectivity",
    "closed_form_spectrum",
    "family_graph",
    "pairing_decomposition",
    "parse_graph6",
    "run_identities",
    "run_identity_suite",
    "scan_conjecture",
    "spectrum_of",
    "token_graph",
    "write_graph6",
]
