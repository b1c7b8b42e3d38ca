import logging
from typing import List

from tokenlap.combinatorics import SubsetIndex, binom
from tokenlap.errors import FamilyParameterError
from tokenlap.graphs.core import Graph
from tokenlap.graphs.families import double_graph, doubled_johnson_graph, odd_graph, star_graph
from tokenlap.spectral.closed_forms import DoubledJohnsonLaplacianValues, doubled_johnson_values
from tokenlap.spectral.core import spectrum_of
from tokenlap.tokens import token_graph
from tokenlap.types import DiscrepancyReport, IsomorphismCheck, StarConventionReport

logger = logging.getLogger(__name__)

star_targets = ["doubled-johnson", "double-odd"]


def check_isomorphism(
    source: Graph, target: Graph, mapping: List[int], source_name: str = "", target_name: str = ""
) -> IsomorphismCheck:
    """mapping[v] is the image of source vertex v; adjacency must be preserved in both directions"""
    names = dict(source=source_name, target=target_name)
    if source.n != target.n or len(mapping) != source.n:
        return IsomorphismCheck(
            holds=False, reason=f"vertex counts differ: {source.n} and {target.n}", **names
        )
    if sorted(mapping) != list(range(target.n)):
        return IsomorphismCheck(holds=False, reason="mapping is not a bijection", **names)
    if source.edge_count != target.edge_count:
        return IsomorphismCheck(
            holds=False,
            reason=f"edge counts differ: {source.edge_count} and {target.edge_count}",
            **names,
        )
    for u, v in source.edges():
        if not target.has_edge(mapping[u], mapping[v]):
            return IsomorphismCheck(
                holds=False,
                witness=(u, v),
                reason=f"edge {u}-{v} maps to the non-edge {mapping[u]}-{mapping[v]}",
                **names,
            )
    return IsomorphismCheck(holds=True, **names)


def _star_token_map(k: int, m: int, target: str) -> List[int]:
    """vertex 0 of S_m is the center; a k-subset holding the center goes to the lower side"""
    index = SubsetIndex(m, k)
    spokes = m - 1
    lower = SubsetIndex(spokes, k - 1)
    upper = SubsetIndex(spokes, k)
    full = (1 << spokes) - 1
    mapping = []
    for mask in index.masks:
        spoke_set = mask >> 1
        if mask & 1:
            mapping.append(lower.rank(spoke_set))
        elif target == "double-odd":
            # V' of the double holds the (k-1)-subset left free by the tokens
            mapping.append(lower.size + lower.rank(full & ~spoke_set))
        else:
            mapping.append(lower.size + upper.rank(spoke_set))
    return mapping


def star_isomorphism_check(k: int, m: int, target: str = "doubled-johnson") -> IsomorphismCheck:
    """F_k(S_m) against J(m-1;k-1,k), or against the double odd graph when m = 2k"""
    if not 1 <= k <= m - 1:
        raise FamilyParameterError(f"F_k(S_m) needs 1 <= k <= m-1, got k={k}, m={m}")
    if target == "double-odd":
        if m != 2 * k or k < 2:
            raise FamilyParameterError(f"F_k(S_m) is a double odd graph only for m = 2k >= 4, got k={k}, m={m}")
        target_graph = double_graph(odd_graph(k))
        target_name = f"double:odd:{k}"
    elif target == "doubled-johnson":
        target_graph = doubled_johnson_graph(m - 1, k - 1)
        target_name = f"doubled-johnson:{m - 1},{k - 1}"
    else:
        raise FamilyParameterError(f"Unknown star target {target}, expected one of {star_targets}")
    source = token_graph(star_graph(m), k).graph
    check = check_isomorphism(
        source, target_graph, _star_token_map(k, m, target), f"F_{k}(star:{m})", target_name
    )
    if not check.holds:
        logger.info("star map F_%d(S_%d) -> %s fails: %s", k, m, target_name, check.reason)
    return check


def verify_star_isomorphism(k: int, m: int) -> bool:
    holds = star_isomorphism_check(k, m).holds
    if m == 2 * k and k >= 2:
        holds = holds and star_isomorphism_check(k, m, "double-odd").holds
    return holds


def verify_doubled_johnson_symmetry(n: int, k: int) -> IsomorphismCheck:
    """J(n;k,k+1) ≅ J(n;n-k-1,n-k) by complementing every subset"""
    if not 0 <= k <= n - 1:
        raise FamilyParameterError(f"J(n;k,k+1) needs 0 <= k <= n-1, got n={n}, k={k}")
    source = doubled_johnson_graph(n, k)
    target = doubled_johnson_graph(n, n - k - 1)
    names = dict(source_name=f"doubled-johnson:{n},{k}", target_name=f"doubled-johnson:{n},{n - k - 1}")
    if source.n != binom(n + 1, k + 1) or source.edge_count != (n - k) * binom(n, k):
        return IsomorphismCheck(
            source=names["source_name"],
            target=names["target_name"],
            holds=False,
            reason=f"{source.n} vertices and {source.edge_count} edges do not match the counts",
        )
    full = (1 << n) - 1
    lower, upper = SubsetIndex(n, k), SubsetIndex(n, k + 1)
    target_lower, target_upper = SubsetIndex(n, n - k - 1), SubsetIndex(n, n - k)
    mapping = [target_lower.size + target_upper.rank(full & ~mask) for mask in lower.masks]
    mapping += [target_lower.rank(full & ~mask) for mask in upper.masks]
    return check_isomorphism(source, target, mapping, **names)


def _unmatched(values: List[float], against: List[float], tol: float) -> List[float]:
    return [v for v in values if not any(abs(v - w) <= tol for w in against)]


def doubled_johnson_discrepancy(n: int, k: int, tol: float = 1e-8) -> DiscrepancyReport:
    """numeric Laplacian spectrum of J(n;k,k+1) against the listed closed values"""
    numeric = spectrum_of(doubled_johnson_graph(n, k))
    subject = f"doubled-johnson:{n},{k}"
    try:
        listed = [float(v) for v in doubled_johnson_values(DoubledJohnsonLaplacianValues(n=n, k=k)).values]
    except ValueError as error:
        return DiscrepancyReport(
            subject=subject,
            numeric=numeric,
            divergent=False,
            note=f"no listed values for these parameters: {error}",
        )
    missing = _unmatched(numeric.distinct, listed, tol)
    absent = _unmatched(listed, numeric.distinct, tol)
    return DiscrepancyReport(
        subject=subject,
        numeric=numeric,
        listed=listed,
        missing_from_list=missing,
        listed_but_absent=absent,
        divergent=bool(missing or absent),
        note="the numeric spectrum is authoritative" if missing or absent else None,
    )


def star_convention_discrepancy(n: int, k: int) -> StarConventionReport:
    """F_k(S_{n-1}) and J(n;k-1,k) as literally written, then the check that holds for S_n"""
    if n < 3 or not 1 <= k <= n - 2:
        raise FamilyParameterError(f"Need n >= 3 and 1 <= k <= n-2, got n={n}, k={k}")
    token_vertices = binom(n - 1, k)
    johnson_vertices = binom(n, k - 1) + binom(n, k)
    return StarConventionReport(
        n=n,
        k=k,
        literal_token_vertices=token_vertices,
        literal_johnson_vertices=johnson_vertices,
        literal_consistent=token_vertices == johnson_vertices,
        implemented=star_isomorphism_check(k, n),
    )
