"""
Tests for the stabilizer tableau oracle.
"""

import networkx as nx
import pytest

from src.core.errors import ImpossibleOutcomeError
from src.core.graph_state import make_graph
from src.oracle.pauli_string import PauliString, graph_generator
from src.oracle.tableau import stabilizes, tableau_measure, tableau_of


def test_generators_of_path():
    """Test the graph generators."""
    t = tableau_of(nx.path_graph(3))
    assert [str(p) for p in t.generators()] == ["+X0 Z1", "+Z0 X1 Z2", "+Z1 X2"]


def test_products_and_signs():
    """Test group membership with signs."""
    t = tableau_of(nx.path_graph(2))
    assert stabilizes(t, PauliString.parse("Y0 Y1"))
    assert not stabilizes(t, PauliString.parse("-Y0 Y1"))
    assert not stabilizes(t, PauliString.parse("X0"))


def test_measurement_makes_outcome_stabilizer():
    """Test that a measured Pauli joins the stabilizer."""
    t = tableau_measure(tableau_of(nx.path_graph(3)), 1, "Z", -1)
    assert stabilizes(t, PauliString.parse("-Z1"))
    assert stabilizes(t, PauliString.parse("-X0"))
    assert stabilizes(t, PauliString.parse("-X2"))


def test_deterministic_outcome():
    """Test measurements whose outcome is fixed."""
    t = tableau_of(make_graph([0, 1]))
    assert tableau_measure(t, 0, "X", 1) == t
    with pytest.raises(ImpossibleOutcomeError):
        tableau_measure(t, 0, "X", -1)


def test_y_measurement_matches_graph_rule():
    """Test Y on a path middle against the contracted edge."""
    t = tableau_measure(tableau_of(nx.path_graph(3)), 1, "Y", 1)
    contracted = nx.Graph([(0, 2)])
    # Byproduct sqrt(-iZ) on both ends maps X to Y
    for a in (0, 2):
        generator = graph_generator(contracted, a)
        lab = PauliString({v: ("Y" if op == "X" else op) for v, op in generator.ops.items()})
        assert stabilizes(t, lab)


def test_six_vertex_graph_stabilizers():
    """Test generators and a product for a hub joined to five vertices, two of them linked."""
    g = make_graph(range(6), [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (4, 5)])
    t = tableau_of(g)
    assert stabilizes(t, PauliString.parse("X0 Z1 Z2 Z3 Z4 Z5"))
    assert stabilizes(t, PauliString.parse("Z0 X4 Z5"))
    assert stabilizes(t, PauliString.parse("Y4 Y5"))
    assert not stabilizes(t, PauliString.parse("-Y4 Y5"))
    assert not stabilizes(t, PauliString.parse("X0 Z1"))
