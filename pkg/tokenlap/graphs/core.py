from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from tokenlap.combinatorics import elements_of
from tokenlap.errors import GraphValidationError

# graph6 short form header limit; also the largest base graph a token graph is built from
MAX_BASE_ORDER = 62


@dataclass(frozen=True)
class Graph:
    """undirected simple graph, adj[i] is the neighbour bitset of vertex i (0-indexed)"""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphValidationError(f"Graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise GraphValidationError(
                f"Adjacency has {len(self.adj)} rows for n={self.n} vertices"
            )
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphValidationError(f"Vertex {i + 1} has a neighbour outside [n]")
            if row >> i & 1:
                raise GraphValidationError(f"Loop at vertex {i + 1}")
            for j in elements_of(row):
                if not self.adj[j] >> i & 1:
                    raise GraphValidationError(
                        f"Asymmetric adjacency between {i + 1} and {j + 1}"
                    )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """edges given as 0-indexed vertex pairs"""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"Loop at vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"Edge ({u + 1}, {v + 1}) outside [{n}]")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_labeled_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """edges given with the 1-indexed labels used in reports"""
        return cls.from_edges(n, ((u - 1, v - 1) for u, v in edges))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> List[int]:
        return elements_of(self.adj[u])

    def degree(self, u: int) -> int:
        return bin(self.adj[u]).count("1")

    def degrees(self) -> List[int]:
        return [self.degree(u) for u in range(self.n)]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """pairs (u, v) with u < v, sorted"""
        for u in range(self.n):
            for v in elements_of(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def labeled_edges(self) -> List[Tuple[int, int]]:
        return [(u + 1, v + 1) for u, v in self.edges()]

    def is_regular(self) -> Optional[int]:
        """common degree, or None when degrees differ"""
        degrees = set(self.degrees())
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_connected(self) -> bool:
        return len(connected_components(self)) == 1

    def is_bipartite(self) -> bool:
        side = {}
        for start in range(self.n):
            if start in side:
                continue
            side[start] = 0
            frontier = [start]
            while frontier:
                u = frontier.pop()
                for v in self.neighbors(u):
                    if v not in side:
                        side[v] = 1 - side[u]
                        frontier.append(v)
                    elif side[v] == side[u]:
                        return False
        return True


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def connected_components(g: Graph) -> List[List[int]]:
    """maximal connected vertex sets (0-indexed), ordered by their smallest member"""
    unseen = (1 << g.n) - 1
    components = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        reached = 1 << start
        frontier = reached
        while frontier:
            grown = 0
            for u in elements_of(frontier):
                grown |= g.adj[u]
            frontier = grown & ~reached
            reached |= frontier
        unseen &= ~reached
        components.append(elements_of(reached))
    return components


def labeled_components(g: Graph) -> List[List[int]]:
    return [[u + 1 for u in block] for block in connected_components(g)]


def from_networkx(g: nx.Graph) -> Graph:
    nodes = sorted(g.nodes())
    position = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((position[u], position[v]) for u, v in g.edges()))


def to_networkx(g: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges())
    return result
