from itertools import combinations
from typing import Dict, List, Literal, Type, Union

from pydantic import BaseModel, PositiveInt, ValidationError, conint, root_validator

from tokenlap.combinatorics import SubsetIndex, elements_of, mask_of
from tokenlap.errors import FamilyParameterError, UnknownFamilyError
from tokenlap.graphs.core import Graph
from tokenlap.graphs.graph6 import parse_graph6


class FamilyBase(BaseModel):
    class Config:
        allow_mutation = False
        extra = "forbid"


class Complete(FamilyBase):
    kind: Literal["complete"] = "complete"
    n: PositiveInt


class Empty(FamilyBase):
    kind: Literal["empty"] = "empty"
    n: PositiveInt


class Path(FamilyBase):
    kind: Literal["path"] = "path"
    n: PositiveInt


class Cycle(FamilyBase):
    kind: Literal["cycle"] = "cycle"
    n: conint(ge=3)


class Star(FamilyBase):
    """S_n = K_{1,n-1}, center is vertex 1"""

    kind: Literal["star"] = "star"
    n: PositiveInt


class CompleteBipartite(FamilyBase):
    kind: Literal["complete-bipartite"] = "complete-bipartite"
    n1: PositiveInt
    n2: PositiveInt


class Johnson(FamilyBase):
    kind: Literal["johnson"] = "johnson"
    n: PositiveInt
    k: PositiveInt

    @root_validator(skip_on_failure=True)
    def k_in_range(cls, values):
        if not 1 <= values["k"] <= values["n"] - 1:
            raise ValueError("Johnson(n,k) requires 1 <= k <= n-1")
        return values


class Odd(FamilyBase):
    kind: Literal["odd"] = "odd"
    k: conint(ge=2)


class DoubledJohnson(FamilyBase):
    kind: Literal["doubled-johnson"] = "doubled-johnson"
    n: PositiveInt
    k: conint(ge=0)

    @root_validator(skip_on_failure=True)
    def k_in_range(cls, values):
        if values["k"] > values["n"] - 1:
            raise ValueError("DoubledJohnson(n,k) requires 0 <= k <= n-1")
        return values


class Given(FamilyBase):
    """an explicit graph carried as its graph6 record"""

    kind: Literal["graph6"] = "graph6"
    code: str


class Double(FamilyBase):
    kind: Literal["double"] = "double"
    of: "GraphFamilySpec"


GraphFamilySpec = Union[
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    Johnson,
    Odd,
    DoubledJohnson,
    Given,
    Double,
]

Double.update_forward_refs()


def _from_neighbor_lists(n: int, rows: List[List[int]]) -> Graph:
    return Graph(n, tuple(mask_of(row) for row in rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_bipartite_graph(n1: int, n2: int) -> Graph:
    return Graph.from_edges(
        n1 + n2, ((i, n1 + j) for i in range(n1) for j in range(n2))
    )


def johnson_graph(n: int, k: int) -> Graph:
    """k-subsets of [n] in lex rank order, adjacent iff they share k-1 elements"""
    index = SubsetIndex(n, k)
    ranks = index.lookup()
    rows = []
    for mask in index.masks:
        outside = [b for b in range(n) if not mask >> b & 1]
        rows.append(
            [ranks[mask ^ (1 << a) ^ (1 << b)] for a in elements_of(mask) for b in outside]
        )
    return _from_neighbor_lists(index.size, rows)


def odd_graph(k: int) -> Graph:
    """(k-1)-subsets of [2k-1] in lex rank order, adjacent iff disjoint"""
    ground = 2 * k - 1
    index = SubsetIndex(ground, k - 1)
    ranks = index.lookup()
    rows = []
    for mask in index.masks:
        outside = [b for b in range(ground) if not mask >> b & 1]
        rows.append([ranks[mask_of(c)] for c in combinations(outside, k - 1)])
    return _from_neighbor_lists(index.size, rows)


def doubled_johnson_graph(n: int, k: int) -> Graph:
    """k-subsets (lex order) followed by (k+1)-subsets (lex order), adjacent iff one contains the other"""
    lower = SubsetIndex(n, k)
    upper = SubsetIndex(n, k + 1)
    lower_ranks = lower.lookup()
    rows: List[List[int]] = [[] for _ in range(lower.size + upper.size)]
    for r, mask in enumerate(upper.masks):
        vertex = lower.size + r
        for a in elements_of(mask):
            below = lower_ranks[mask ^ (1 << a)]
            rows[vertex].append(below)
            rows[below].append(vertex)
    return _from_neighbor_lists(lower.size + upper.size, rows)


def double_graph(g: Graph) -> Graph:
    """V followed by V', u ~ v' iff u ~ v in g"""
    n = g.n
    adj = [row << n for row in g.adj] + list(g.adj)
    return Graph(2 * n, tuple(adj))


def make_family(spec: GraphFamilySpec) -> Graph:
    builder = builders.get(spec.kind)
    if builder is None:
        raise UnknownFamilyError(spec.kind, supported_families)
    return builder(spec)


builders = {
    "complete": lambda s: complete_graph(s.n),
    "empty": lambda s: Graph.empty(s.n),
    "path": lambda s: path_graph(s.n),
    "cycle": lambda s: cycle_graph(s.n),
    "star": lambda s: star_graph(s.n),
    "complete-bipartite": lambda s: complete_bipartite_graph(s.n1, s.n2),
    "johnson": lambda s: johnson_graph(s.n, s.k),
    "odd": lambda s: odd_graph(s.k),
    "doubled-johnson": lambda s: doubled_johnson_graph(s.n, s.k),
    "graph6": lambda s: parse_graph6(s.code),
    "double": lambda s: double_graph(make_family(s.of)),
}

families: Dict[str, Type[FamilyBase]] = {
    "complete": Complete,
    "empty": Empty,
    "path": Path,
    "cycle": Cycle,
    "star": Star,
    "complete-bipartite": CompleteBipartite,
    "johnson": Johnson,
    "odd": Odd,
    "doubled-johnson": DoubledJohnson,
    "graph6": Given,
    "double": Double,
}

supported_families = list(families.keys())


def family_from_text(text: str) -> GraphFamilySpec:
    """parse `name:params`, e.g. `path:4`, `johnson:4,2`, `double:cycle:5`, `graph6:Ch`"""
    name, _, params = text.strip().partition(":")
    name = name.lower()
    model = families.get(name)
    if model is None:
        raise UnknownFamilyError(name, supported_families)
    try:
        if name == "double":
            return Double(of=family_from_text(params))
        if name == "graph6":
            return Given(code=params)
        fields = [f for f in model.__fields__ if f != "kind"]
        values = [v for v in params.split(",") if v.strip()]
        if len(values) != len(fields):
            raise FamilyParameterError(
                f"Family {name} expects parameters {fields}, got {params!r}"
            )
        return model(**{f: int(v) for f, v in zip(fields, values)})
    except (ValidationError, ValueError) as error:
        raise FamilyParameterError(f"Invalid parameters for {name}: {error}") from error


def family_graph(text: str) -> Graph:
    return make_family(family_from_text(text))
