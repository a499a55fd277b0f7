"""
Tests that the graph rules agree with both oracles.
"""

import random

import networkx as nx

from src.core.clifford import CorrectionFrame, LocalClifford
from src.core.graph_state import canonical_edges, graphs_equal
from src.core.measurement import LC
from src.lattice.grid import Coord, GridSpec, cluster_graph
from src.oracle.verification import replay_statevector, replay_tableau, verify_measurement
from tests.conftest import random_graphs


def _random_frame(g: nx.Graph, rng: random.Random) -> CorrectionFrame:
    elements = list(LocalClifford.all_elements())
    return CorrectionFrame({v: rng.choice(elements) for v in g.nodes() if rng.random() < 0.5})


def test_rules_match_statevector():
    """Test one random Pauli measurement per random graph, both outcomes."""
    rng = random.Random(2024)
    for g in random_graphs(seed=2024, count=500):
        a = rng.choice(sorted(g.nodes()))
        basis = rng.choice("XYZ")
        for outcome in (1, -1):
            if basis == "X" and g.degree(a) == 0 and outcome == -1:
                continue
            assert verify_measurement(g, CorrectionFrame.identity(), a, basis, outcome)


def test_rules_match_statevector_under_frames():
    """Test graph-frame measurements when the state carries local Cliffords."""
    rng = random.Random(99)
    for g in random_graphs(seed=99, count=100):
        frame = _random_frame(g, rng)
        a = rng.choice(sorted(g.nodes()))
        basis = rng.choice("XYZ")
        if basis == "X" and g.degree(a) == 0:
            continue
        assert verify_measurement(g, frame, a, basis, rng.choice((1, -1)))


def test_explicit_b0_matches_statevector():
    """Test the X rule with every admissible neighbor."""
    g = nx.Graph([(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)])
    for b0 in g.adj[0]:
        for outcome in (1, -1):
            assert verify_measurement(g, CorrectionFrame.identity(), 0, "X", outcome, b0=b0)


def test_replays_agree_on_sequences():
    """Test random measurement sequences on both oracles."""
    rng = random.Random(17)
    for g in random_graphs(seed=17, count=40, min_n=5, max_n=9):
        order = sorted(g.nodes())
        rng.shuffle(order)
        steps = [(v, rng.choice("XYZ")) for v in order[: len(order) // 2]]
        dense = replay_statevector(g, steps, random.Random(1))
        sparse = replay_tableau(g, steps, random.Random(1))
        assert dense.passed
        assert sparse.passed
        assert graphs_equal(dense.graph, sparse.graph)
        assert dense.outcomes == sparse.outcomes


def test_replay_with_local_complement_steps():
    """Test LC pseudo-steps and explicit b0 in a replay."""
    g = nx.star_graph(4)
    steps = [(0, LC), (1, "X", 2), (3, "Y")]
    assert replay_statevector(g, steps, random.Random(3)).passed
    assert replay_tableau(g, steps, random.Random(3)).passed


def test_tableau_replay_on_lattice():
    """Test a Y chain on a 20x20 lattice with the tableau."""
    spec = GridSpec(20, 20)
    g = cluster_graph(spec)
    row = [spec.vertex_id(Coord(x, 10)) for x in range(20)]
    off_row = [spec.vertex_id(Coord(x, y)) for x in range(3, 9) for y in (9, 11)]
    steps = [(v, "Z") for v in off_row] + [(v, "Y") for v in row[3:9]]
    result = replay_tableau(g, steps, random.Random(8))
    assert result.passed
    assert result.graph.has_edge(row[2], row[9])


def test_replay_defaults_to_plus_outcomes():
    """Test that a replay without a random source takes every +1 branch."""
    g = nx.path_graph(3)
    result = replay_tableau(g, [(1, "Y")])
    assert result.passed
    assert result.outcomes == [1]
    assert canonical_edges(result.graph) == [(0, 2)]
