"""
Tests for GHZ collection along measured paths.
"""

import random

import networkx as nx
import pytest

from src.core.errors import DomainError, SpaceError
from src.core.graph_state import canonical_edges
from src.oracle.verification import replay_statevector, replay_tableau
from src.primitives.ghz import ghz_collect_ops, ghz_collect_step

LEAVES = [1, 2]
CENTER = 0


def _setup(k: int, with_aux: bool = False):
    """Star 0 - {1, 2}, path 0 - p1 .. pk - nxt, optional aux on p1 and pk."""
    path = list(range(3, 3 + k))
    nxt = 3 + k
    g = nx.Graph([(CENTER, leaf) for leaf in LEAVES])
    nx.add_path(g, [CENTER, *path, nxt])
    aux = None
    if with_aux:
        aux = (nxt + 1, nxt + 2)
        g.add_edges_from([(path[0], aux[0]), (path[-1], aux[1])])
    return g, path, nxt, aux


def _is_star_at(g: nx.Graph, center: int, leaves) -> bool:
    return canonical_edges(g.subgraph([center, *leaves])) == sorted(
        tuple(sorted((center, leaf))) for leaf in leaves
    ) and all(g.degree(leaf) == 1 for leaf in leaves)


@pytest.mark.parametrize("k", [1, 3, 5])
def test_odd_path_moves_center(k):
    """Test that odd paths transfer the center directly."""
    g, path, nxt, _ = _setup(k)
    result = ghz_collect_step(g, CENTER, path, nxt)
    assert _is_star_at(result, nxt, [CENTER, *LEAVES])


@pytest.mark.parametrize("k", [2, 4])
def test_even_path_without_fix_keeps_center(k):
    """Test the regression: even paths leave the center where it was."""
    g, path, nxt, _ = _setup(k)
    result = ghz_collect_step(g, CENTER, path, nxt, parity_fix=False)
    assert result.degree(nxt) == 1
    assert not _is_star_at(result, nxt, [CENTER, *LEAVES])


@pytest.mark.parametrize("k", [2, 4])
def test_even_path_with_fix_moves_center(k):
    """Test the parity fix with two auxiliary vertices."""
    g, path, nxt, aux = _setup(k, with_aux=True)
    result = ghz_collect_step(g, CENTER, path, nxt, aux=aux)
    assert _is_star_at(result, nxt, [CENTER, *LEAVES])


@pytest.mark.parametrize("k,with_aux", [(1, False), (3, False), (2, True), (4, True)])
def test_collection_matches_oracles(k, with_aux):
    """Test collection sequences on the statevector and tableau."""
    g, path, nxt, aux = _setup(k, with_aux)
    ops = ghz_collect_ops(g, CENTER, path, nxt, aux=aux)
    assert replay_statevector(g, ops, random.Random(k)).passed
    assert replay_tableau(g, ops, random.Random(k)).passed


def test_even_path_needs_aux():
    """Test SpaceError when the fix has no auxiliary vertices."""
    g, path, nxt, _ = _setup(2)
    with pytest.raises(SpaceError):
        ghz_collect_ops(g, CENTER, path, nxt)


def test_path_must_be_isolated():
    """Test rejection of paths with stray neighbors."""
    g, path, nxt, _ = _setup(3)
    g.add_edge(path[1], 99)
    with pytest.raises(DomainError):
        ghz_collect_ops(g, CENTER, path, nxt)
    with pytest.raises(DomainError):
        ghz_collect_ops(g, CENTER, [], nxt)
