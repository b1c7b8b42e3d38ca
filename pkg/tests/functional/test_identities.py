import random

from tokenlap.combinatorics import inclusion_matrix
from tokenlap.graphs.core import Graph
from tokenlap.graphs.families import complete_graph, cycle_graph, star_graph
from tokenlap.identities import (
    check_commutation,
    check_intertwining,
    edge_multiplicities,
    recover_lower_laplacian,
    run_identities,
    supported_identities,
    token_laplacian,
    verify_adjacency_relation,
    verify_commutation,
    verify_complement_sum,
    verify_general_projection,
    verify_gram,
    verify_incidence_factorization,
    verify_intertwining,
    verify_projection,
    verify_recovery,
)
from tokenlap.matrix import SparseIntMatrix
from tokenlap.tokens import incidence_matrix, laplacian, random_orientation, token_graph


def test_projection_of_p4_example(p4):
    report = verify_projection(p4, 2)
    assert report.holds
    assert report.discrepancy is None
    assert report.graph == "Ch"


def test_gram_identity():
    for n in range(2, 9):
        for k in range(1, n):
            assert verify_gram(n, k).holds


def test_all_identities_hold_on_small_graphs(graphs_up_to_6):
    for g in graphs_up_to_6:
        for k in range(1, g.n // 2 + 1):
            for h in range(1, k + 1):
                reports = run_identities(g, h, k)
                assert [r.identity for r in reports] == supported_identities
                failed = [r.identity for r in reports if not r.holds]
                assert not failed, (g, h, k, failed)


def test_recovery_equals_direct_laplacian(paw):
    assert recover_lower_laplacian(paw, 1, 2) == laplacian(paw)
    g = cycle_graph(6)
    assert recover_lower_laplacian(g, 2, 3) == token_laplacian(g, 2)
    assert verify_recovery(g, 2, 3).holds


def test_equal_levels_hold_trivially(paw):
    for check in (verify_intertwining, verify_general_projection, verify_adjacency_relation, verify_recovery):
        assert check(paw, 2, 2).holds


def test_corrupted_laplacian_breaks_intertwining(p4):
    b = inclusion_matrix(4, 2, 1)
    corrupted = laplacian(p4) + SparseIntMatrix.from_entries(4, 4, [(0, 0, 1)])
    report = check_intertwining(b, corrupted, token_laplacian(p4, 2))
    assert not report.holds
    assert report.discrepancy.row == 0
    assert report.discrepancy.col == 0
    assert report.discrepancy.lhs == report.discrepancy.rhs + 1


def test_symmetric_perturbation_breaks_commutation(p4):
    rng = random.Random(11)
    l2 = token_laplacian(p4, 2)
    for _ in range(20):
        i, j = rng.sample(range(6), 2)
        weight = rng.choice([-3, -2, -1, 1, 2, 3])
        perturbation = SparseIntMatrix.from_entries(6, 6, [(i, j, weight), (j, i, weight)])
        corrupted = l2 + perturbation
        assert corrupted.is_symmetric()
        # F_2(P_4) is connected, so no symmetric off-diagonal pair commutes with L_2
        assert not check_commutation(l2, corrupted).holds


def _random_symmetric(rng, size):
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = rng.randint(-3, 3)
    return SparseIntMatrix.from_rows(rows)


def test_random_symmetric_pairs_through_commutation_check():
    rng = random.Random(5)
    outcomes = []
    for _ in range(20):
        first, second = _random_symmetric(rng, 4), _random_symmetric(rng, 4)
        report = check_commutation(first, second)
        assert report.holds == (first @ second == second @ first)
        outcomes.append(report.holds)
    assert not all(outcomes)


def test_commutation_and_complement_sum(paw):
    assert verify_commutation(paw, 2).holds
    assert verify_complement_sum(paw, 2).holds
    assert verify_complement_sum(star_graph(6), 3).holds


def test_incidence_factorization_edge_multiplicities():
    g = Graph.from_labeled_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)])
    assert verify_incidence_factorization(g, 2).holds
    # every edge repeated C(n-2, k-1) times
    assert edge_multiplicities(g, 2) == {edge: 3 for edge in g.labeled_edges()}
    assert set(edge_multiplicities(complete_graph(5), 3).values()) == {3}


def test_incidence_factorization_under_random_orientation(graphs_up_to_5):
    for seed, g in enumerate(graphs_up_to_5):
        for k in range(1, g.n):
            assert verify_incidence_factorization(g, k, random_orientation(seed)).holds
            tg = token_graph(g, k)
            t_k = incidence_matrix(tg.graph, random_orientation(seed))
            assert t_k @ t_k.T == laplacian(tg.graph)


def test_random_orientation_is_seeded():
    edges = complete_graph(6).edges()
    first, second = random_orientation(3), random_orientation(3)
    outcomes = [first(u, v) for u, v in edges]
    assert outcomes == [second(u, v) for u, v in edges]
    # decisions are remembered per edge
    assert outcomes == [first(u, v) for u, v in edges]
    assert not all(outcomes)
    assert incidence_matrix(complete_graph(6), random_orientation(3)) != incidence_matrix(complete_graph(6))
