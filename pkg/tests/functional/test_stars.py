import numpy as np
import pytest

from tokenlap.combinatorics import binom
from tokenlap.errors import FamilyParameterError
from tokenlap.graphs.core import Graph
from tokenlap.graphs.families import doubled_johnson_graph, path_graph, star_graph
from tokenlap.spectral.closed_forms import DoubleOddLaplacian, closed_form_spectrum
from tokenlap.spectral.core import spectrum_of, token_spectrum
from tokenlap.spectral.stars import (
    check_isomorphism,
    doubled_johnson_discrepancy,
    star_convention_discrepancy,
    star_isomorphism_check,
    verify_doubled_johnson_symmetry,
    verify_star_isomorphism,
)
from tokenlap.tokens import token_graph


@pytest.mark.parametrize("k,m", [(1, 3), (1, 5), (2, 4), (2, 5), (3, 5), (3, 6), (2, 6), (4, 7)])
def test_star_token_graph_is_doubled_johnson(k, m):
    check = star_isomorphism_check(k, m)
    assert check.holds, check.reason
    assert check.target == f"doubled-johnson:{m - 1},{k - 1}"


@pytest.mark.parametrize("k", [2, 3, 4])
def test_balanced_star_token_graph_is_double_odd(k):
    check = star_isomorphism_check(k, 2 * k, "double-odd")
    assert check.holds, check.reason
    assert verify_star_isomorphism(k, 2 * k)


def test_star_vertex_counts():
    for m in range(3, 8):
        for k in range(1, m):
            assert token_graph(star_graph(m), k).graph.n == binom(m - 1, k - 1) + binom(m - 1, k)


@pytest.mark.parametrize("k", [2, 3])
def test_star_spectrum_against_double_odd(k):
    expected = closed_form_spectrum(DoubleOddLaplacian(k=k)).to_spectrum()
    assert expected.matches(token_spectrum(star_graph(2 * k), k), 1e-8)


def test_star_check_rejects_bad_parameters():
    with pytest.raises(FamilyParameterError):
        star_isomorphism_check(0, 4)
    with pytest.raises(FamilyParameterError):
        star_isomorphism_check(4, 4)
    with pytest.raises(FamilyParameterError):
        star_isomorphism_check(2, 5, "double-odd")
    with pytest.raises(FamilyParameterError):
        star_isomorphism_check(2, 4, "cube")


def test_isomorphism_check_reports_failures():
    p4 = path_graph(4)
    assert check_isomorphism(p4, path_graph(4), [0, 1, 2, 3]).holds
    assert check_isomorphism(p4, path_graph(4), [3, 2, 1, 0]).holds
    swapped = check_isomorphism(p4, path_graph(4), [1, 0, 2, 3])
    assert not swapped.holds
    assert swapped.witness == (1, 2)
    assert "bijection" in check_isomorphism(p4, p4, [0, 0, 1, 2]).reason
    assert "vertex counts" in check_isomorphism(p4, path_graph(5), [0, 1, 2, 3]).reason
    assert "edge counts" in check_isomorphism(p4, Graph.empty(4), [0, 1, 2, 3]).reason


@pytest.mark.parametrize("n,k", [(3, 0), (3, 1), (4, 1), (5, 2), (6, 1)])
def test_doubled_johnson_symmetry(n, k):
    check = verify_doubled_johnson_symmetry(n, k)
    assert check.holds, check.reason
    assert np.allclose(
        spectrum_of(doubled_johnson_graph(n, k)).values(),
        spectrum_of(doubled_johnson_graph(n, n - k - 1)).values(),
    )


def test_doubled_johnson_listed_values_diverge():
    report = doubled_johnson_discrepancy(3, 1)
    assert report.listed == [0.0, 1.0, 3.0]
    assert np.allclose(report.numeric.values(), [0, 1, 1, 3, 3, 4])
    assert report.missing_from_list == pytest.approx([4.0])
    assert report.listed_but_absent == []
    assert report.divergent


def test_doubled_johnson_without_listed_values():
    report = doubled_johnson_discrepancy(4, 2)
    assert not report.divergent
    assert report.listed == []
    assert "no listed values" in report.note


def test_star_convention():
    report = star_convention_discrepancy(5, 2)
    assert report.literal_token_vertices == binom(4, 2)
    assert report.literal_johnson_vertices == binom(5, 1) + binom(5, 2)
    assert not report.literal_consistent
    assert report.implemented.holds
    with pytest.raises(FamilyParameterError):
        star_convention_discrepancy(2, 1)
