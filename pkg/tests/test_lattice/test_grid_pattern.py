"""
Tests for lattice geometry and measurement patterns.
"""

import pytest

from src.core.errors import DomainError, RequestParseError
from src.lattice.grid import Coord, GridSpec, cluster_graph, manhattan
from src.lattice.pattern import CellRole, GridPattern


def test_cluster_graph_size():
    """Test vertex and edge counts of a small lattice."""
    g = cluster_graph(GridSpec(3, 2))
    assert g.number_of_nodes() == 6
    assert g.number_of_edges() == 7
    assert g.has_edge(0, 1) and g.has_edge(0, 3)


def test_vertex_ids():
    """Test row-major vertex ids."""
    spec = GridSpec(5, 4)
    assert spec.vertex_id(Coord(2, 3)) == 17
    assert spec.coord_of(17) == Coord(2, 3)
    with pytest.raises(DomainError):
        spec.vertex_id(Coord(5, 0))
    with pytest.raises(DomainError):
        spec.coord_of(20)


def test_grid_minimum_size():
    """Test that degenerate grids are rejected."""
    with pytest.raises(DomainError):
        GridSpec(1, 5)


def test_neighbor_order():
    """Test right, down, left, up ordering and clipping."""
    spec = GridSpec(3, 3)
    assert spec.neighbors(Coord(1, 1)) == [Coord(2, 1), Coord(1, 2), Coord(0, 1), Coord(1, 0)]
    assert spec.neighbors(Coord(0, 0)) == [Coord(1, 0), Coord(0, 1)]
    assert manhattan(Coord(0, 0), Coord(2, 3)) == 5


def test_empty_pattern_ascii():
    """Test that an empty 3x3 pattern renders nine dots."""
    assert GridPattern(GridSpec(3, 3)).to_ascii() == "...\n...\n...\n"


def test_pattern_roles_in_ascii():
    """Test the role characters."""
    pattern = GridPattern(GridSpec(4, 2))
    pattern.set(Coord(0, 0), CellRole.TARGET)
    pattern.mark([Coord(1, 0), Coord(2, 0)], CellRole.MEAS_X)
    pattern.set(Coord(3, 0), CellRole.TARGET)
    pattern.set(Coord(1, 1), CellRole.MEAS_Z)
    pattern.set(Coord(2, 1), CellRole.JUNCTION)
    pattern.set(Coord(3, 1), CellRole.MEAS_Y)
    assert pattern.to_ascii() == "TXXT\n.ZJY\n"


def test_target_cannot_be_overwritten():
    """Test target protection."""
    pattern = GridPattern(GridSpec(3, 3))
    pattern.set(Coord(1, 1), CellRole.TARGET)
    with pytest.raises(DomainError):
        pattern.set(Coord(1, 1), CellRole.MEAS_X)


def test_off_grid_cell():
    """Test off-grid access."""
    pattern = GridPattern(GridSpec(3, 3))
    assert not pattern.is_free(Coord(3, 0))
    with pytest.raises(DomainError):
        pattern.role(Coord(-1, 0))


def test_pattern_dict_round_trip():
    """Test pattern serialization."""
    pattern = GridPattern(GridSpec(4, 3))
    pattern.set(Coord(0, 0), CellRole.TARGET)
    pattern.set(Coord(2, 1), CellRole.MEAS_Y)
    restored = GridPattern.from_dict(pattern.to_dict())
    assert restored == pattern
    assert restored.to_json() == pattern.to_json()


def test_pattern_from_malformed_dict():
    """Test malformed pattern input."""
    with pytest.raises(RequestParseError):
        GridPattern.from_dict({"width": 3, "height": 3, "cells": [{"x": 0, "y": 0, "role": "Q"}]})
    with pytest.raises(RequestParseError):
        GridPattern.from_dict({"width": 3})
