"""
Tests for graph construction, local complementation and serialization.
"""

import networkx as nx
import pytest

from src.core.errors import DomainError
from src.core.graph_state import (
    canonical_edges,
    graph_from_json,
    graph_to_json,
    graphs_equal,
    local_complement,
    make_graph,
    neighborhood,
    schmidt_rank,
    star_graph,
)
from tests.conftest import random_graphs


def test_make_graph_rejects_self_loop():
    """Test self-loop rejection."""
    with pytest.raises(DomainError):
        make_graph([0, 1], [(1, 1)])


def test_make_graph_rejects_unknown_endpoint():
    """Test unknown endpoint rejection."""
    with pytest.raises(DomainError):
        make_graph([0, 1], [(0, 2)])


def test_neighborhood_unknown_vertex():
    """Test neighborhood of a missing vertex."""
    with pytest.raises(DomainError):
        neighborhood(make_graph([0]), 7)


def test_local_complement_on_star():
    """Test that LC at a star's center gives the complete graph."""
    g = local_complement(star_graph(0, [1, 2, 3]), 0)
    assert canonical_edges(g) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_local_complement_leaves_input_untouched():
    """Test that LC returns a new graph."""
    g = star_graph(0, [1, 2])
    local_complement(g, 0)
    assert canonical_edges(g) == [(0, 1), (0, 2)]


def test_local_complement_is_involution():
    """Test LC twice at the same vertex on random graphs."""
    for i, g in enumerate(random_graphs(seed=7, count=1000)):
        a = i % g.number_of_nodes()
        assert graphs_equal(local_complement(local_complement(g, a), a), g)


def test_json_canonical_form():
    """Test that JSON output is canonical and round-trips."""
    g = make_graph([2, 0, 1], [(2, 0), (1, 0)])
    text = graph_to_json(g)
    assert text == '{"vertices":[0,1,2],"edges":[[0,1],[0,2]]}'
    assert graphs_equal(graph_from_json(text), g)


def test_graph_from_json_malformed():
    """Test malformed graph objects."""
    with pytest.raises(DomainError):
        graph_from_json('{"vertices": [0]}')


def test_schmidt_rank_examples():
    """Test cut ranks of small graphs."""
    path = nx.path_graph(4)
    assert schmidt_rank(path, [0, 1]) == 1
    assert schmidt_rank(star_graph(0, [1, 2, 3]), [0]) == 1
    assert schmidt_rank(nx.complete_graph(4), [0, 1]) == 1
    assert schmidt_rank(nx.cycle_graph(4), [0, 2]) == 1
    assert schmidt_rank(nx.cycle_graph(4), [0, 1]) == 2


def test_schmidt_rank_trivial_cut():
    """Test empty and full bipartitions."""
    g = nx.path_graph(3)
    assert schmidt_rank(g, []) == 0
    assert schmidt_rank(g, [0, 1, 2]) == 0


def test_schmidt_rank_invariant_under_local_complement():
    """Test that LC preserves every cut rank."""
    for i, g in enumerate(random_graphs(seed=11, count=50, min_n=4)):
        part = list(range(g.number_of_nodes() // 2))
        a = i % g.number_of_nodes()
        assert schmidt_rank(local_complement(g, a), part) == schmidt_rank(g, part)


def test_graphs_equal_on_labelled_graphs():
    """Test comparison of graphs keyed by target labels."""
    g = nx.Graph([("a", "b"), ("b", "c")])
    h = nx.Graph([("c", "b"), ("b", "a")])
    assert graphs_equal(g, h)
    assert not graphs_equal(g, nx.Graph([("a", "b"), ("a", "c")]))
    assert not graphs_equal(g, nx.Graph([("a", "b"), ("b", "c"), ("c", "d")]))


def test_canonical_edges_on_labelled_graphs():
    """Test canonical ordering with string labels."""
    g = nx.Graph([("d", "a"), ("c", "a"), ("b", "a")])
    assert canonical_edges(g) == [("a", "b"), ("a", "c"), ("a", "d")]
    assert graph_to_json(g) == '{"vertices":["a","b","c","d"],"edges":[["a","b"],["a","c"],["a","d"]]}'
