import random

import pytest

from tokenlap.combinatorics import binom, subset_from_labels
from tokenlap.errors import GraphValidationError, SubsetIndexError, TokenCapExceeded
from tokenlap.graphs.core import Graph, complement
from tokenlap.graphs.families import complete_graph, johnson_graph, path_graph, star_graph
from tokenlap.tokens import (
    adjacency,
    complementary_vertex,
    implicit_token_neighbors,
    incidence_matrix,
    laplacian,
    token_graph,
    token_neighbors,
)


def test_f2_of_p4(p4):
    tg = token_graph(p4, 2)
    assert tg.graph.n == 6
    # {1,2}-{1,3}, {1,3}-{1,4}, {1,3}-{2,3}, {1,4}-{2,4}, {2,3}-{2,4}, {2,4}-{3,4}
    assert tg.graph.labeled_edges() == [(1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, 6)]


def test_token_graph_of_complete_graph_is_johnson():
    assert token_graph(complete_graph(6), 3).graph == johnson_graph(6, 3)


def test_one_token_reproduces_the_graph(p4):
    assert token_graph(p4, 1).graph == p4


def test_complementary_token_count_is_isomorphic(paw):
    k2 = token_graph(paw, 2)
    mirrored = [k2.vertex(complementary_vertex(k2, v)) for v in range(k2.graph.n)]
    assert sorted(mirrored) == list(range(k2.graph.n))
    for u, v in k2.graph.edges():
        assert k2.graph.has_edge(mirrored[u], mirrored[v])


def test_token_neighbors(p4):
    tg = token_graph(p4, 2)
    subset = subset_from_labels([1, 3])
    expected = [subset_from_labels(s) for s in ([1, 2], [1, 4], [2, 3])]
    assert token_neighbors(tg, subset) == expected
    assert sorted(implicit_token_neighbors(p4, subset)) == sorted(expected)
    with pytest.raises(SubsetIndexError):
        token_neighbors(tg, subset_from_labels([1]))


def test_parameter_checks(p4):
    with pytest.raises(SubsetIndexError):
        token_graph(p4, 0)
    with pytest.raises(SubsetIndexError):
        token_graph(p4, 4)
    with pytest.raises(TokenCapExceeded) as error:
        token_graph(star_graph(30), 5, cap=1000)
    assert error.value.size == 142506
    with pytest.raises(GraphValidationError):
        token_graph(Graph.empty(63), 1)


def test_laplacian_and_incidence(p4):
    lap = laplacian(p4)
    assert lap.to_dense() == [
        [1, -1, 0, 0],
        [-1, 2, -1, 0],
        [0, -1, 2, -1],
        [0, 0, -1, 1],
    ]
    assert lap.row_sums() == [0, 0, 0, 0]
    t = incidence_matrix(p4)
    assert t @ t.T == lap
    assert t.column(0) == {0: 1, 1: -1}
    flipped = incidence_matrix(p4, orientation=lambda u, v: False)
    assert flipped.column(0) == {0: -1, 1: 1}
    assert flipped @ flipped.T == lap


def test_isolated_vertex_has_empty_laplacian_row():
    g = Graph.from_edges(3, [(0, 1)])
    assert laplacian(g).row(2) == {}
    assert adjacency(complement(g)).row(2) == {0: 1, 1: 1}


def test_token_neighbors_match_explicit_adjacency(graphs_up_to_6):
    for g in graphs_up_to_6:
        for k in range(1, g.n):
            tg = token_graph(g, k)
            for vertex, subset in enumerate(tg.index.masks):
                ranks = [tg.vertex(s) for s in token_neighbors(tg, subset)]
                assert ranks == tg.graph.neighbors(vertex)


def test_implicit_neighbors_on_random_graphs_of_order_8():
    rng = random.Random(8)
    for _ in range(200):
        g = Graph.from_edges(8, [(u, v) for u in range(8) for v in range(u + 1, 8) if rng.random() < 0.4])
        k = rng.randint(1, 7)
        tg = token_graph(g, k)
        vertex = rng.randrange(tg.graph.n)
        moved = implicit_token_neighbors(g, tg.subset(vertex))
        assert sorted(tg.vertex(s) for s in moved) == tg.graph.neighbors(vertex)


def test_token_graph_counts(graphs_up_to_6):
    for g in graphs_up_to_6:
        for k in range(1, g.n):
            tg = token_graph(g, k)
            assert tg.graph.n == binom(g.n, k)
            assert tg.graph.edge_count == binom(g.n - 2, k - 1) * g.edge_count


def test_complement_subsets_map_k_tokens_onto_n_minus_k(graphs_up_to_6):
    for g in graphs_up_to_6:
        for k in range(1, g.n):
            tg, mirror = token_graph(g, k), token_graph(g, g.n - k)
            mapping = [mirror.vertex(complementary_vertex(tg, v)) for v in range(tg.graph.n)]
            assert sorted(mapping) == list(range(mirror.graph.n))
            assert tg.graph.edge_count == mirror.graph.edge_count
            for u, v in tg.graph.edges():
                assert mirror.graph.has_edge(mapping[u], mapping[v])
