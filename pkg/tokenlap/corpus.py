"""graph corpora for scans: the networkx atlas of every graph on at most 7 vertices"""

import logging
from typing import Iterator, List

import networkx as nx

from tokenlap.errors import GraphValidationError
from tokenlap.graphs.core import Graph, from_networkx
from tokenlap.graphs.graph6 import write_graph6

logger = logging.getLogger(__name__)

ATLAS_MAX_ORDER = 7


def atlas_graphs(max_n: int = ATLAS_MAX_ORDER, connected_only: bool = False, min_n: int = 1) -> Iterator[Graph]:
    """graphs up to isomorphism, ordered by vertex count, then edge count, then degree sequence"""
    if not 1 <= max_n <= ATLAS_MAX_ORDER:
        raise GraphValidationError(
            f"The graph atlas covers 1 to {ATLAS_MAX_ORDER} vertices, got max_n={max_n}"
        )
    for g in nx.graph_atlas_g():
        order = g.number_of_nodes()
        if order < min_n or order == 0:
            continue
        if order > max_n:
            break
        if connected_only and not nx.is_connected(g):
            continue
        yield from_networkx(g)


def atlas_graph6(max_n: int = ATLAS_MAX_ORDER, connected_only: bool = False) -> List[str]:
    lines = [write_graph6(g) for g in atlas_graphs(max_n, connected_only)]
    logger.debug("atlas corpus: %d graphs with at most %d vertices", len(lines), max_n)
    return lines
