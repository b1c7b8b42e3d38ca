"""Common eigenbasis of the token graphs of a graph and of its complement.

L(F_k(G)) and L(F_k(Ḡ)) commute and add up to L(J(n,k)), so every common
eigenvector pairs an eigenvalue of each with an eigenvalue of the Johnson graph.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from tokenlap.combinatorics import token_distribution_count
from tokenlap.config import get_settings
from tokenlap.errors import PairingError
from tokenlap.graphs.core import Graph, complement, connected_components
from tokenlap.identities import token_laplacian
from tokenlap.spectral.closed_forms import JohnsonLaplacian, closed_form_spectrum
from tokenlap.spectral.core import eigh_sym
from tokenlap.tokens import check_token_parameters, token_graph
from tokenlap.types import IntegerBound, PairingResult, PairingTriple

logger = logging.getLogger(__name__)

MIXING = 1 / math.sqrt(2)


def _residuals(l_g: np.ndarray, l_c: np.ndarray, vectors: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    graph_values = np.einsum("ij,ij->j", vectors, l_g @ vectors)
    complement_values = np.einsum("ij,ij->j", vectors, l_c @ vectors)
    residuals = np.maximum(
        np.abs(l_g @ vectors - vectors * graph_values).max(axis=0),
        np.abs(l_c @ vectors - vectors * complement_values).max(axis=0),
    )
    return graph_values, complement_values, residuals


def _refine(l_g: np.ndarray, l_c: np.ndarray, tol: float) -> np.ndarray:
    """diagonalize L, then L̄ inside every eigenspace of L"""
    decomposition = eigh_sym(l_g)
    values, vectors = decomposition.values, decomposition.vectors.copy()
    start = 0
    while start < len(values):
        stop = start + 1
        while stop < len(values) and values[stop] - values[stop - 1] <= max(tol, tol * abs(values[start])):
            stop += 1
        if stop - start > 1:
            block = vectors[:, start:stop]
            projected = block.T @ l_c @ block
            inner = eigh_sym((projected + projected.T) / 2, check=False)
            vectors[:, start:stop] = block @ inner.vectors
        start = stop
    return vectors


def pairing_decomposition(
    g: Graph, k: int, theta: float = MIXING, tol: Optional[float] = None
) -> PairingResult:
    tol = tol if tol is not None else get_settings().pairing_tol
    check_token_parameters(g, k)
    l_g = token_laplacian(g, k).to_numpy()
    l_c = token_laplacian(complement(g), k).to_numpy()

    vectors = eigh_sym(l_g + theta * l_c).vectors
    graph_values, complement_values, residuals = _residuals(l_g, l_c, vectors)
    refined = False
    if residuals.max(initial=0.0) > tol:
        logger.debug("mixed eigenbasis residual %.3e, refining per eigenspace", residuals.max())
        vectors = _refine(l_g, l_c, tol)
        graph_values, complement_values, residuals = _residuals(l_g, l_c, vectors)
        refined = True
        if residuals.max(initial=0.0) > tol:
            raise PairingError(
                f"No common eigenbasis within {tol}: largest residual {residuals.max():.3e}"
            )

    sums = graph_values + complement_values
    rounded = sorted(int(round(s)) for s in sums)
    johnson = closed_form_spectrum(JohnsonLaplacian(n=g.n, k=k))
    expected = [int(v) for v, m in johnson.groups for _ in range(m)]
    sums_match = rounded == expected and bool(np.all(np.abs(sums - np.round(sums)) <= tol))
    if not sums_match:
        logger.info("pairing sums of a %d-vertex graph differ from J(%d,%d)", g.n, g.n, k)

    order = np.lexsort((complement_values, graph_values))
    triples = [
        PairingTriple(
            graph=float(graph_values[i]),
            complement=float(complement_values[i]),
            johnson=float(sums[i]),
        )
        for i in order
    ]
    return PairingResult(
        n=g.n,
        k=k,
        triples=triples,
        residuals=[float(residuals[i]) for i in order],
        johnson_sums=rounded,
        sums_match_johnson=sums_match,
        refined=refined,
    )


def count_integer_eigenvalues(values: np.ndarray, int_tol: float) -> int:
    return int(np.sum(np.abs(values - np.round(values)) <= int_tol))


def integer_eigenvalue_bound(g: Graph, k: int, int_tol: Optional[float] = None) -> IntegerBound:
    """each component of F_k(Ḡ) gives an integer eigenvalue of F_k(G)"""
    int_tol = int_tol if int_tol is not None else get_settings().int_tol
    check_token_parameters(g, k)
    bound = len(connected_components(token_graph(complement(g), k).graph))
    sizes = [len(c) for c in connected_components(complement(g))]
    values = eigh_sym(token_laplacian(g, k)).values
    count = count_integer_eigenvalues(values, int_tol)
    return IntegerBound(
        n=g.n,
        k=k,
        bound=bound,
        count=count,
        holds=count >= bound,
        distribution_count=token_distribution_count(sizes, k),
        complement_components=sorted(sizes),
    )