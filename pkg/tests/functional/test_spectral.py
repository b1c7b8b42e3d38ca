import math

import numpy as np
import pytest

from tokenlap.combinatorics import binom
from tokenlap.corpus import atlas_graphs
from tokenlap.errors import (
    EigenSolverError,
    EmbeddingError,
    KernelPreconditionError,
    MatrixDimensionError,
)
from tokenlap.graphs.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    double_graph,
    johnson_graph,
    path_graph,
    star_graph,
)
from tokenlap.graphs.core import Graph
from tokenlap.identities import token_laplacian
from tokenlap.spectral.core import (
    adjacency_spectrum,
    algebraic_connectivity,
    complement_algebraic_connectivity,
    eigh_sym,
    fiedler_vector,
    is_embedding,
    lift_vector,
    project_vector,
    rayleigh,
    restriction_embeddings,
    spectrum_contains,
    spectrum_of,
    token_spectrum,
    verify_regular_adjacency_lift,
)
from tokenlap.tokens import laplacian, token_graph
from tokenlap.types import Spectrum


def test_p4_example(p4, p4_token_spectrum):
    values = eigh_sym(laplacian(p4)).values
    assert np.allclose(values, [0, 2 - math.sqrt(2), 2, 2 + math.sqrt(2)], atol=1e-9)
    assert np.allclose(token_spectrum(p4, 2).values(), p4_token_spectrum, atol=1e-9)


def test_zero_matrix_gives_identity_basis():
    decomposition = eigh_sym(np.zeros((3, 3)))
    assert np.all(decomposition.values == 0)
    assert np.allclose(decomposition.vectors.T @ decomposition.vectors, np.eye(3))


def test_cycle_spectrum():
    spectrum = spectrum_of(cycle_graph(6))
    assert spectrum.dimension == 6
    assert [m for _, m in spectrum.groups] == [1, 2, 2, 1]
    assert np.allclose(spectrum.distinct, [0, 1, 3, 4])


def test_eigensolver_rejects_bad_input():
    with pytest.raises(EigenSolverError):
        eigh_sym(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(EigenSolverError):
        eigh_sym(laplacian(path_graph(5)), cap=4)
    with pytest.raises(MatrixDimensionError):
        eigh_sym(np.zeros((2, 3)))


def test_trace_identities_of_eigenvalues(graphs_up_to_5):
    for g in graphs_up_to_5:
        lap = laplacian(g)
        values = eigh_sym(lap).values
        assert abs(values.sum() - lap.trace()) <= 1e-6 * (1 + lap.trace())
        square = (lap @ lap).trace()
        assert abs((values**2).sum() - square) <= 1e-6 * (1 + square)


def test_k1_and_johnson_spectra():
    assert spectrum_of(complete_graph(1)).groups == [(0.0, 1)]
    johnson = spectrum_of(johnson_graph(4, 2))
    assert [m for _, m in johnson.groups] == [1, 3, 2]
    assert np.allclose(johnson.distinct, [0, 4, 6])


def test_fig1_graphs():
    target = [0, 2, 3, 4, 5]
    selected = [
        g
        for g in atlas_graphs(5, min_n=5)
        if np.allclose(spectrum_of(g).values(), target, atol=1e-8)
    ]
    assert selected
    for g in selected:
        assert np.allclose(token_spectrum(g, 2).values(), [0, 2, 3, 3, 4, 5, 5, 5, 7, 8], atol=1e-8)


def test_spectrum_contains():
    def spec(values):
        return Spectrum.from_values(values, group_tol=1e-8)

    big = spec([0, 2, 3, 3, 4, 5, 5, 5, 7, 8])
    assert spectrum_contains(spec([0, 2, 3, 4, 5]), big, 1e-7)
    assert spectrum_contains(big, big, 1e-7)
    assert not spectrum_contains(spec([0, 2]), spec([0, 3, 3]), 1e-7)
    assert not spectrum_contains(spec([3, 3, 3]), spec([0, 3, 3]), 1e-7)


def test_containment_chain(connected_up_to_6):
    for g in connected_up_to_6:
        spectra = {k: token_spectrum(g, k) for k in range(1, g.n // 2 + 1)}
        for k in spectra:
            for h in range(1, k + 1):
                assert spectrum_contains(spectra[h], spectra[k], 1e-7), (g, h, k)


def test_lift_of_p4_eigenvector(p4):
    v = np.array([1.0, -1.0, -1.0, 1.0])
    lifted = lift_vector(v, 4, 1, 2)
    assert np.allclose(lifted, [0, 0, 2, -2, 0, 0])
    assert np.allclose(token_laplacian(p4, 2).apply(lifted), 2 * lifted)
    assert np.allclose(lift_vector(np.ones(4), 4, 1, 2), 2 * np.ones(6))
    with pytest.raises(MatrixDimensionError):
        lift_vector(np.ones(5), 4, 1, 2)


def test_lifting_preserves_eigenvectors(connected_up_to_6):
    for g in connected_up_to_6:
        for k in range(2, g.n // 2 + 1):
            for h in range(1, k):
                decomposition = eigh_sym(token_laplacian(g, h))
                l_k = token_laplacian(g, k)
                lifted = lift_vector(decomposition.vectors, g.n, h, k)
                residual = np.abs(l_k.apply(lifted) - lifted * decomposition.values).max(axis=0)
                assert np.all(residual <= 1e-7 * (1 + decomposition.values))


def test_lifted_orthogonal_basis_scales_exactly():
    # orthogonal integer eigenvectors of L(P_4) for the eigenvalues 0 and 2
    basis = np.array([[1.0, 1.0, 1.0, 1.0], [1.0, -1.0, -1.0, 1.0]]).T
    lifted = lift_vector(basis, 4, 1, 2)
    gram = lifted.T @ lifted
    assert np.array_equal(np.diag(gram), np.diag(basis.T @ basis) * np.array([6.0, 2.0]))
    assert gram[0, 1] == 0


def test_projection_of_lifted_vector():
    v = np.array([1.0, -1.0, -1.0, 1.0])
    projected = project_vector(lift_vector(v, 4, 1, 2), 4, 1, 2)
    assert np.allclose(projected, binom(2, 1) * v)
    assert np.allclose(project_vector(np.ones(6), 4, 1, 2), binom(3, 1) * np.ones(4))


def _eigenvector_for(g, k, value):
    decomposition = eigh_sym(token_laplacian(g, k))
    position = int(np.argmin(np.abs(decomposition.values - value)))
    assert abs(decomposition.values[position] - value) < 1e-9
    return decomposition.vectors[:, position]


def test_projection_of_token_only_eigenvector_is_null(p4):
    w = _eigenvector_for(p4, 2, 3 - math.sqrt(3))
    assert project_vector(w, 4, 1, 2) is None


def test_restriction_embeddings(p4):
    w = _eigenvector_for(p4, 2, 3 - math.sqrt(3))
    inside, outside = restriction_embeddings(w, 4, 2, 3)
    assert len(inside) == binom(3, 1)
    assert len(outside) == binom(3, 2)
    assert abs(inside.sum()) <= 1e-8
    assert abs(outside.sum()) <= 1e-8
    zero_in, zero_out = restriction_embeddings(np.zeros(6), 4, 2, 0)
    assert not zero_in.any() and not zero_out.any()
    with pytest.raises(KernelPreconditionError):
        restriction_embeddings(lift_vector(np.array([1.0, -1.0, -1.0, 1.0]), 4, 1, 2), 4, 2, 0)


def test_rayleigh_quotient(p4):
    assert is_embedding(fiedler_vector(p4))
    assert not is_embedding(np.ones(4))
    assert rayleigh(p4, fiedler_vector(p4)) == pytest.approx(2 - math.sqrt(2), abs=1e-10)
    assert rayleigh(complete_graph(2), np.array([1.0, -1.0])) == pytest.approx(2.0)
    with pytest.raises(EmbeddingError):
        rayleigh(p4, np.zeros(4))


def test_fiedler_value_bounds_random_embeddings(connected_up_to_6):
    rng = np.random.default_rng(0)
    for g in connected_up_to_6:
        if g.n < 2:
            continue
        alpha = algebraic_connectivity(g)
        for _ in range(100):
            v = rng.normal(size=g.n)
            v -= v.mean()
            assert alpha <= rayleigh(g, v) + 1e-9


def test_algebraic_connectivity_values(p4):
    assert algebraic_connectivity(p4) == pytest.approx(2 - math.sqrt(2))
    assert algebraic_connectivity(complete_graph(5)) == pytest.approx(5)
    assert algebraic_connectivity(complete_graph(1)) == 0
    assert algebraic_connectivity(Graph.empty(3)) == 0


def test_complement_connectivity(paw):
    for g in (path_graph(5), cycle_graph(6), paw):
        direct, via_spectrum = complement_algebraic_connectivity(g)
        assert direct == pytest.approx(max(0.0, via_spectrum), abs=1e-9)


@pytest.mark.parametrize(
    "family,smallest,expected",
    [
        (complete_graph, 2, lambda n: n),
        (star_graph, 3, lambda n: 1),
        (path_graph, 2, lambda n: 2 * (1 - math.cos(math.pi / n))),
    ],
)
def test_family_connectivity_is_kept_by_token_graphs(family, smallest, expected):
    for n in range(smallest, 8):
        g = family(n)
        for k in range(1, n // 2 + 1):
            assert algebraic_connectivity(token_graph(g, k).graph) == pytest.approx(expected(n), abs=1e-8)


def test_complete_bipartite_connectivity():
    for n1 in range(1, 6):
        for n2 in range(max(n1, 2), 7 - n1):
            g = complete_bipartite_graph(n1, n2)
            for k in range(1, g.n // 2 + 1):
                assert algebraic_connectivity(token_graph(g, k).graph) == pytest.approx(n1, abs=1e-8)


def test_regular_adjacency_lift():
    assert verify_regular_adjacency_lift(complete_graph(5), 2) is True
    assert verify_regular_adjacency_lift(path_graph(4), 2) is None


def test_adjacency_spectrum_of_double_is_symmetric(graphs_up_to_5):
    for g in graphs_up_to_5:
        values = np.array(adjacency_spectrum(double_graph(g)).values())
        assert np.allclose(np.sort(values), np.sort(-values), atol=1e-8)
