import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from tokenlap.combinatorics import SubsetIndex, VertexSubset, binom, elements_of, mask_of
from tokenlap.config import get_settings
from tokenlap.errors import GraphValidationError, SubsetIndexError, TokenCapExceeded
from tokenlap.graphs.core import MAX_BASE_ORDER, Graph
from tokenlap.matrix import SparseIntMatrix

logger = logging.getLogger(__name__)

# orientation rule: given an edge (u, v) with u < v, return True to orient it u -> v
Orientation = Callable[[int, int], bool]


@dataclass(frozen=True)
class TokenGraph:
    base: Graph
    k: int
    graph: Graph
    index: SubsetIndex

    def subset(self, vertex: int) -> VertexSubset:
        return self.index.unrank(vertex)

    def vertex(self, subset: VertexSubset) -> int:
        return self.index.rank(subset)


def check_token_parameters(g: Graph, k: int, cap: Optional[int] = None) -> int:
    if g.n > MAX_BASE_ORDER:
        raise GraphValidationError(
            f"Token graphs are built from graphs with at most {MAX_BASE_ORDER} vertices"
        )
    if not 1 <= k <= g.n - 1:
        raise SubsetIndexError(f"k must satisfy 1 <= k <= n-1, got k={k}, n={g.n}")
    size = binom(g.n, k)
    cap = cap if cap is not None else get_settings().token_cap
    if size > cap:
        raise TokenCapExceeded(size, cap)
    return size


def _moves(g: Graph, subset: VertexSubset) -> List[VertexSubset]:
    moved = []
    for a in elements_of(subset):
        for b in elements_of(g.adj[a] & ~subset):
            moved.append(subset ^ (1 << a) ^ (1 << b))
    return moved


def token_graph(g: Graph, k: int, cap: Optional[int] = None) -> TokenGraph:
    """F_k(g): vertex i is the i-th k-subset in lex order, A ~ B iff A △ B is an edge of g"""
    size = check_token_parameters(g, k, cap)
    index = SubsetIndex(g.n, k)
    ranks = index.lookup()
    adj = [mask_of(ranks[moved] for moved in _moves(g, subset)) for subset in index.masks]
    logger.debug("built F_%d of a %d-vertex graph: %d vertices", k, g.n, size)
    return TokenGraph(base=g, k=k, graph=Graph(size, tuple(adj)), index=index)


def token_neighbors(tg: TokenGraph, subset: VertexSubset) -> List[VertexSubset]:
    """neighbours of a k-subset from the base graph alone, sorted by lex rank"""
    if bin(subset).count("1") != tg.k:
        raise SubsetIndexError(
            f"Subset has {bin(subset).count('1')} elements, expected {tg.k}"
        )
    return sorted(_moves(tg.base, subset), key=tg.index.rank)


def implicit_token_neighbors(g: Graph, subset: VertexSubset) -> List[VertexSubset]:
    """same moves as token_neighbors, without any explicit token graph (no size cap)"""
    return _moves(g, subset)


def adjacency(g: Graph) -> SparseIntMatrix:
    return SparseIntMatrix(g.n, g.n, {u: {v: 1 for v in g.neighbors(u)} for u in range(g.n)})


def degree_matrix(g: Graph) -> SparseIntMatrix:
    return SparseIntMatrix.diagonal(g.degrees())


def laplacian(g: Graph) -> SparseIntMatrix:
    data = {}
    for u in range(g.n):
        row = {v: -1 for v in g.neighbors(u)}
        if row:
            row[u] = len(row)
        data[u] = row
    return SparseIntMatrix(g.n, g.n, data)


def lower_to_higher(u: int, v: int) -> bool:
    return True


def random_orientation(seed: Optional[int] = None) -> Orientation:
    """orientation that flips a seeded coin once per edge and remembers the outcome"""
    rng = random.Random(seed)
    decided: Dict[Tuple[int, int], bool] = {}

    def orient(u: int, v: int) -> bool:
        if (u, v) not in decided:
            decided[(u, v)] = rng.random() < 0.5
        return decided[(u, v)]

    return orient


def incidence_matrix(g: Graph, orientation: Orientation = lower_to_higher) -> SparseIntMatrix:
    """n x |E| oriented incidence: column e has +1 at its tail and -1 at its head"""
    data = {}
    for column, (u, v) in enumerate(g.edges()):
        tail, head = (u, v) if orientation(u, v) else (v, u)
        data.setdefault(tail, {})[column] = 1
        data.setdefault(head, {})[column] = -1
    return SparseIntMatrix(g.n, g.edge_count, data)


def complementary_vertex(tg: TokenGraph, vertex: int) -> VertexSubset:
    """image of a vertex under F_k ≅ F_{n-k}, A -> [n] \\ A"""
    full = (1 << tg.base.n) - 1
    return full & ~tg.index.unrank(vertex)
