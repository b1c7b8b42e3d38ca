import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from tokenlap.combinatorics import SubsetIndex, binomial_matrix, inclusion_matrix
from tokenlap.config import get_settings
from tokenlap.errors import (
    EigenSolverError,
    EmbeddingError,
    KernelPreconditionError,
    MatrixDimensionError,
)
from tokenlap.graphs.core import Graph, complement
from tokenlap.matrix import SparseIntMatrix
from tokenlap.tokens import adjacency, laplacian, token_graph
from tokenlap.types import Spectrum

logger = logging.getLogger(__name__)

MatrixLike = Union[SparseIntMatrix, np.ndarray]

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """ascending eigenvalues with an orthonormal column system of eigenvectors"""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.values)


def _as_array(m: MatrixLike) -> np.ndarray:
    if isinstance(m, SparseIntMatrix):
        return m.to_numpy()
    return np.asarray(m, dtype=float)


def eigh_sym(
    m: MatrixLike,
    eig_tol: Optional[float] = None,
    cap: Optional[int] = None,
    check: bool = True,
) -> EigenDecomposition:
    settings = get_settings()
    eig_tol = eig_tol if eig_tol is not None else settings.eig_tol
    cap = cap if cap is not None else settings.eig_cap
    array = _as_array(m)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise MatrixDimensionError(f"Eigensolver needs a square matrix, got shape {array.shape}")
    size = array.shape[0]
    if size > cap:
        raise EigenSolverError(f"Dimension {size} exceeds the eigensolver cap of {cap}")
    if size == 0:
        return EigenDecomposition(values=np.zeros(0), vectors=np.zeros((0, 0)))
    scale = float(np.abs(array).max())
    if np.abs(array - array.T).max() > SYMMETRY_TOL * max(1.0, scale):
        raise EigenSolverError("Matrix is not symmetric")
    try:
        values, vectors = np.linalg.eigh(array)
    except np.linalg.LinAlgError as error:
        raise EigenSolverError(f"Eigensolver did not converge: {error}") from error

    if check:
        # rounding in the reconstruction grows with the dimension
        bound = eig_tol * (1.0 + scale) * max(1.0, np.sqrt(size))
        reconstruction = np.abs((vectors * values) @ vectors.T - array).max()
        orthogonality = np.abs(vectors.T @ vectors - np.eye(size)).max()
        if reconstruction > bound or orthogonality > eig_tol * max(1.0, np.sqrt(size)):
            raise EigenSolverError(
                f"Eigen decomposition residuals too large: reconstruction {reconstruction:.3e}, "
                f"orthogonality {orthogonality:.3e}"
            )
    return EigenDecomposition(values=values, vectors=vectors)


def group_tolerance(m: MatrixLike) -> float:
    array = _as_array(m)
    if array.size == 0:
        return 1e-8
    return 1e-8 * max(1.0, float(np.abs(array).max()) * array.shape[0])


def matrix_spectrum(m: MatrixLike, group_tol: Optional[float] = None) -> Spectrum:
    decomposition = eigh_sym(m)
    tol = group_tol if group_tol is not None else group_tolerance(m)
    return Spectrum.from_values(decomposition.values, group_tol=tol)


def spectrum_of(g: Graph, group_tol: Optional[float] = None) -> Spectrum:
    """Laplacian spectrum"""
    return matrix_spectrum(laplacian(g), group_tol)


def adjacency_spectrum(g: Graph, group_tol: Optional[float] = None) -> Spectrum:
    return matrix_spectrum(adjacency(g), group_tol)


def token_spectrum(g: Graph, k: int, group_tol: Optional[float] = None) -> Spectrum:
    return spectrum_of(token_graph(g, k).graph, group_tol)


def spectrum_contains(small: Spectrum, big: Spectrum, tol: Optional[float] = None) -> bool:
    """multiset inclusion with value distance <= tol, greedy over both sorted lists"""
    tol = tol if tol is not None else get_settings().containment_tol
    big_values = big.values()
    position = 0
    for value in small.values():
        while position < len(big_values) and big_values[position] < value - tol:
            position += 1
        if position == len(big_values) or abs(big_values[position] - value) > tol:
            return False
        position += 1
    return True


def lift_vector(v: np.ndarray, n: int, h: int, k: int) -> np.ndarray:
    """B(n;k,h) v: the value at a k-subset is the sum over its h-subsets"""
    b = inclusion_matrix(n, k, h)
    if len(v) != b.cols:
        raise MatrixDimensionError(f"Vector of length {len(v)} is not indexed by the {h}-subsets of [{n}]")
    return b.apply(v)


def project_vector(
    w: np.ndarray, n: int, h: int, k: int, null_tol: Optional[float] = None
) -> Optional[np.ndarray]:
    """B(n;k,h)ᵀ w, or None when the projection vanishes"""
    null_tol = null_tol if null_tol is not None else get_settings().null_projection_tol
    b = inclusion_matrix(n, k, h)
    if len(w) != b.rows:
        raise MatrixDimensionError(f"Vector of length {len(w)} is not indexed by the {k}-subsets of [{n}]")
    projected = b.T.apply(w)
    scale = float(np.abs(w).max()) if len(w) else 0.0
    if float(np.abs(projected).max()) <= null_tol * scale:
        return None
    return projected


def algebraic_connectivity(g: Graph) -> float:
    """second smallest Laplacian eigenvalue, 0 for a single vertex"""
    if g.n == 1:
        return 0.0
    values = eigh_sym(laplacian(g), check=False).values
    return max(0.0, float(values[1]))


def fiedler_vector(g: Graph) -> np.ndarray:
    if g.n < 2:
        raise EmbeddingError("A single vertex has no Fiedler vector")
    return eigh_sym(laplacian(g)).vectors[:, 1]


def complement_algebraic_connectivity(g: Graph) -> Tuple[float, float]:
    """α(Ḡ) computed directly and as n - λ_max(G)"""
    values = eigh_sym(laplacian(g)).values
    return algebraic_connectivity(complement(g)), g.n - float(values[-1])


def is_embedding(v: np.ndarray, tol: float = 1e-9) -> bool:
    return abs(float(np.sum(v))) <= tol * max(1, len(v))


def rayleigh(g: Graph, v: np.ndarray) -> float:
    """vᵀLv / vᵀv, cross-checked against the edge sum Σ (v_i - v_j)² / Σ v_i²"""
    v = np.asarray(v, dtype=float)
    if len(v) != g.n:
        raise MatrixDimensionError(f"Vector of length {len(v)} on a graph with {g.n} vertices")
    norm = float(v @ v)
    if norm == 0:
        raise EmbeddingError("Rayleigh quotient of the zero vector")
    quadratic = float(v @ laplacian(g).apply(v)) / norm
    edge_sum = sum((v[i] - v[j]) ** 2 for i, j in g.edges()) / norm
    if abs(quadratic - edge_sum) > 1e-10 * max(1.0, abs(edge_sum)):
        raise EigenSolverError(
            f"Quadratic form {quadratic} and edge sum {edge_sum} disagree"
        )
    return edge_sum


def restriction_embeddings(
    w: np.ndarray, n: int, k: int, a: int, kernel_tol: float = 1e-9
) -> Tuple[np.ndarray, np.ndarray]:
    """split w on F_k into the subsets containing vertex a (0-indexed) and those avoiding it"""
    w = np.asarray(w, dtype=float)
    index = SubsetIndex(n, k)
    if len(w) != index.size:
        raise MatrixDimensionError(f"Vector of length {len(w)} is not indexed by the {k}-subsets of [{n}]")
    projected = binomial_matrix(n, k).T.apply(w)
    if len(w) and float(np.abs(projected).max()) > kernel_tol * max(1.0, float(np.abs(w).max())):
        raise KernelPreconditionError()
    inside = [i for i, mask in enumerate(index.masks) if mask >> a & 1]
    outside = [i for i, mask in enumerate(index.masks) if not mask >> a & 1]
    return w[inside], w[outside]


def verify_regular_adjacency_lift(g: Graph, k: int, tol: float = 1e-8) -> Optional[bool]:
    """when G is d1-regular and F_k is dk-regular, Bv is a (dk - d1 + λ)-eigenvector of A(F_k)
    for every λ-eigenvector v of A(G); None when either graph is irregular"""
    d1 = g.is_regular()
    tg = token_graph(g, k)
    dk = tg.graph.is_regular()
    if d1 is None or dk is None:
        return None
    decomposition = eigh_sym(adjacency(g))
    a_k = adjacency(tg.graph)
    b = binomial_matrix(g.n, k)
    for value, vector in zip(decomposition.values, decomposition.vectors.T):
        lifted = b.apply(vector)
        expected = dk - d1 + value
        if float(np.abs(a_k.apply(lifted) - expected * lifted).max()) > tol * (1 + abs(expected)):
            logger.info("regular lift fails for adjacency eigenvalue %f", value)
            return False
    return True
