"""exact integer checks of the matrix identities between a graph and its token graphs"""

import logging
from collections import Counter
from functools import lru_cache
from typing import Callable, Dict, List, Optional

from tokenlap.combinatorics import binom, binomial_matrix, inclusion_matrix
from tokenlap.errors import SubsetIndexError
from tokenlap.graphs.core import MAX_BASE_ORDER, Graph, complement
from tokenlap.graphs.families import johnson_graph
from tokenlap.graphs.graph6 import write_graph6
from tokenlap.matrix import SparseIntMatrix, exact_solve
from tokenlap.tokens import (
    adjacency,
    check_token_parameters,
    degree_matrix,
    Orientation,
    incidence_matrix,
    laplacian,
    lower_to_higher,
    token_graph,
)
from tokenlap.types import Discrepancy, IdentityReport

logger = logging.getLogger(__name__)


@lru_cache(maxsize=128)
def _token_matrices(g: Graph, k: int) -> Dict[str, SparseIntMatrix]:
    tg = token_graph(g, k)
    return {
        "L": laplacian(tg.graph),
        "A": adjacency(tg.graph),
        "D": degree_matrix(tg.graph),
    }


def token_laplacian(g: Graph, k: int) -> SparseIntMatrix:
    return _token_matrices(g, k)["L"]


def _graph_id(g: Graph) -> Optional[str]:
    return write_graph6(g) if g.n <= MAX_BASE_ORDER else None


def _check_pair(g: Graph, h: int, k: int) -> None:
    if not 1 <= h <= k:
        raise SubsetIndexError(f"Need 1 <= h <= k, got h={h}, k={k}")
    check_token_parameters(g, k)
    check_token_parameters(g, h)


def compare(
    identity: str,
    lhs: SparseIntMatrix,
    rhs: SparseIntMatrix,
    n: int,
    h: Optional[int] = None,
    k: Optional[int] = None,
    graph: Optional[str] = None,
) -> IdentityReport:
    difference = lhs.first_difference(rhs)
    discrepancy = None
    if difference is not None:
        row, col, left = difference
        discrepancy = Discrepancy(row=row, col=col, lhs=left, rhs=rhs.get(row, col))
        logger.info("%s fails at (%d, %d): %d != %d", identity, row, col, left, discrepancy.rhs)
    return IdentityReport(
        identity=identity,
        n=n,
        h=h,
        k=k,
        graph=graph,
        holds=discrepancy is None,
        discrepancy=discrepancy,
    )


def check_intertwining(b: SparseIntMatrix, l_h: SparseIntMatrix, l_k: SparseIntMatrix) -> IdentityReport:
    return compare("intertwining", b @ l_h, l_k @ b, n=l_h.rows)


def check_commutation(first: SparseIntMatrix, second: SparseIntMatrix) -> IdentityReport:
    return compare("commutation", first @ second, second @ first, n=first.rows)


def verify_gram(n: int, k: int) -> IdentityReport:
    """BᵀB = C(n-2,k-1) I + C(n-2,k-2) J for the (n;k)-binomial matrix"""
    b = binomial_matrix(n, k)
    rhs = SparseIntMatrix.identity(n).scale(binom(n - 2, k - 1)) + SparseIntMatrix.ones(n, n).scale(
        binom(n - 2, k - 2)
    )
    return compare("gram", b.T @ b, rhs, n=n, k=k)


def verify_intertwining(g: Graph, h: int, k: int) -> IdentityReport:
    """B(n;k,h) L_h = L_k B(n;k,h)"""
    _check_pair(g, h, k)
    b = inclusion_matrix(g.n, k, h)
    report = check_intertwining(b, token_laplacian(g, h), token_laplacian(g, k))
    return report.copy(update={"h": h, "k": k, "graph": _graph_id(g), "n": g.n})


def verify_projection(g: Graph, k: int) -> IdentityReport:
    """Bᵀ L_k B = C(n-2,k-1) L_1"""
    _check_pair(g, 1, k)
    b = binomial_matrix(g.n, k)
    return compare(
        "projection",
        b.T @ token_laplacian(g, k) @ b,
        laplacian(g).scale(binom(g.n - 2, k - 1)),
        n=g.n,
        h=1,
        k=k,
        graph=_graph_id(g),
    )


def verify_general_projection(g: Graph, h: int, k: int) -> IdentityReport:
    """Bᵀ L_k B = BᵀB L_h for B = B(n;k,h)"""
    _check_pair(g, h, k)
    b = inclusion_matrix(g.n, k, h)
    return compare(
        "general_projection",
        b.T @ token_laplacian(g, k) @ b,
        b.T @ b @ token_laplacian(g, h),
        n=g.n,
        h=h,
        k=k,
        graph=_graph_id(g),
    )


def recover_lower_laplacian(g: Graph, h: int, k: int) -> SparseIntMatrix:
    """L_h = (BᵀB)⁻¹ Bᵀ L_k B, solved exactly without fractions"""
    _check_pair(g, h, k)
    b = inclusion_matrix(g.n, k, h)
    return exact_solve(b.T @ b, b.T @ token_laplacian(g, k) @ b)


def verify_recovery(g: Graph, h: int, k: int) -> IdentityReport:
    return compare(
        "recovery",
        recover_lower_laplacian(g, h, k),
        token_laplacian(g, h),
        n=g.n,
        h=h,
        k=k,
        graph=_graph_id(g),
    )


def verify_adjacency_relation(g: Graph, h: int, k: int) -> IdentityReport:
    """A_k B - B A_h = D_k B - B D_h"""
    _check_pair(g, h, k)
    b = inclusion_matrix(g.n, k, h)
    low, high = _token_matrices(g, h), _token_matrices(g, k)
    return compare(
        "adjacency_relation",
        high["A"] @ b - b @ low["A"],
        high["D"] @ b - b @ low["D"],
        n=g.n,
        h=h,
        k=k,
        graph=_graph_id(g),
    )


def verify_commutation(g: Graph, k: int) -> IdentityReport:
    """L(F_k(G)) and L(F_k(Ḡ)) commute"""
    check_token_parameters(g, k)
    report = check_commutation(token_laplacian(g, k), token_laplacian(complement(g), k))
    return report.copy(update={"k": k, "graph": _graph_id(g), "n": g.n})


def verify_complement_sum(g: Graph, k: int) -> IdentityReport:
    """L(F_k(G)) + L(F_k(Ḡ)) = L(J(n,k)) under the shared subset ranking"""
    check_token_parameters(g, k)
    return compare(
        "complement_sum",
        token_laplacian(g, k) + token_laplacian(complement(g), k),
        laplacian(johnson_graph(g.n, k)),
        n=g.n,
        k=k,
        graph=_graph_id(g),
    )


def verify_incidence_factorization(
    g: Graph, k: int, orientation: Orientation = lower_to_higher
) -> IdentityReport:
    """L_k = T_k T_kᵀ, and C_k = Bᵀ T_k is an incidence matrix of G with every edge repeated C(n-2,k-1) times"""
    check_token_parameters(g, k)
    params = dict(n=g.n, k=k, graph=_graph_id(g))
    tg = token_graph(g, k)
    t_k = incidence_matrix(tg.graph, orientation)
    report = compare("incidence_factorization", t_k @ t_k.T, token_laplacian(g, k), **params)
    if not report.holds:
        report.detail = "L_k != T_k T_kᵀ"
        return report

    c_k = binomial_matrix(g.n, k).T @ t_k
    columns: Dict[int, Dict[int, int]] = {}
    for r, c, v in c_k.entries():
        columns.setdefault(c, {})[r] = v
    edge_counts: Counter = Counter()
    for column in range(c_k.cols):
        entries = columns.get(column, {})
        values = sorted(entries.values())
        ends = sorted(entries)
        if values != [-1, 1] or not g.has_edge(*ends):
            row = ends[0] if ends else 0
            return IdentityReport(
                identity="incidence_factorization",
                holds=False,
                discrepancy=Discrepancy(row=row, col=column, lhs=len(entries), rhs=2),
                detail=f"column {column} of BᵀT_k is not a ±1 column on an edge of G",
                **params,
            )
        edge_counts[tuple(ends)] += 1
    expected = binom(g.n - 2, k - 1)
    for u, v in g.edges():
        if edge_counts[(u, v)] != expected:
            return IdentityReport(
                identity="incidence_factorization",
                holds=False,
                discrepancy=Discrepancy(row=u, col=v, lhs=edge_counts[(u, v)], rhs=expected),
                detail=f"edge {u + 1}-{v + 1} appears {edge_counts[(u, v)]} times in BᵀT_k",
                **params,
            )
    return report


def edge_multiplicities(g: Graph, k: int) -> Dict[tuple, int]:
    """columns of BᵀT_k per edge of G, labelled with 1-indexed endpoints"""
    tg = token_graph(g, k)
    c_k = binomial_matrix(g.n, k).T @ incidence_matrix(tg.graph)
    counts: Counter = Counter()
    for column in range(c_k.cols):
        ends = tuple(sorted(r + 1 for r in c_k.column(column)))
        counts[ends] += 1
    return dict(counts)


pair_identities: Dict[str, Callable[[Graph, int, int], IdentityReport]] = {
    "intertwining": verify_intertwining,
    "general_projection": verify_general_projection,
    "adjacency_relation": verify_adjacency_relation,
    "recovery": verify_recovery,
}

single_identities: Dict[str, Callable[[Graph, int], IdentityReport]] = {
    "projection": verify_projection,
    "commutation": verify_commutation,
    "complement_sum": verify_complement_sum,
    "incidence_factorization": verify_incidence_factorization,
}

supported_identities = ["gram"] + list(pair_identities) + list(single_identities)


def run_identities(g: Graph, h: int, k: int) -> List[IdentityReport]:
    """every identity at (h, k); single-level identities run at k"""
    _check_pair(g, h, k)
    reports = [verify_gram(g.n, k)]
    reports.extend(check(g, h, k) for check in pair_identities.values())
    reports.extend(check(g, k) for check in single_identities.values())
    return reports
