import math
from typing import List

import pytest

from tokenlap.config import get_settings
from tokenlap.corpus import atlas_graphs
from tokenlap.graphs.core import Graph
from tokenlap.graphs.families import path_graph


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def paw() -> Graph:
    """triangle 1-2-4 with the pendant vertex 3 on 1; its complement is K_1 + P_3"""
    return Graph.from_labeled_edges(4, [(1, 2), (1, 3), (1, 4), (2, 4)])


@pytest.fixture
def pendant_triangle() -> Graph:
    """triangle 2-3-4 with the pendant vertex 1 on 2; its complement is the path 3-1-4 plus the isolated vertex 2"""
    return Graph.from_labeled_edges(4, [(1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def p4_token_spectrum() -> List[float]:
    return sorted(
        [0.0, 2 - math.sqrt(2), 3 - math.sqrt(3), 2.0, 2 + math.sqrt(2), 3 + math.sqrt(3)]
    )


@pytest.fixture(scope="session")
def graphs_up_to_5() -> List[Graph]:
    return list(atlas_graphs(5))


@pytest.fixture(scope="session")
def graphs_up_to_6() -> List[Graph]:
    return list(atlas_graphs(6))


@pytest.fixture(scope="session")
def connected_up_to_6() -> List[Graph]:
    return list(atlas_graphs(6, connected_only=True))


@pytest.fixture(scope="session")
def connected_up_to_7() -> List[Graph]:
    return list(atlas_graphs(7, connected_only=True))
