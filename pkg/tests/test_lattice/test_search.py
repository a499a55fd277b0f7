"""
Tests for staircase routes, Dijkstra search and free patches.
"""

import pytest

from src.core.errors import NoPathError
from src.lattice.grid import Coord, GridSpec, manhattan
from src.lattice.pattern import CellRole, GridPattern
from src.lattice.search import dijkstra_nearest, dijkstra_route, find_free_patches
from src.lattice.staircase import (
    is_chordless,
    isolation_cells,
    one_turn_path,
    one_turn_zipper,
    staircase,
    turning_points,
)


def _is_walk(path):
    return all(manhattan(p, q) == 1 for p, q in zip(path, path[1:]))


def test_staircase_alternates():
    """Test a diagonal staircase."""
    path = staircase(Coord(0, 0), Coord(2, 2))
    assert path == [Coord(0, 0), Coord(1, 0), Coord(1, 1), Coord(2, 1), Coord(2, 2)]


def test_staircase_straight_tail():
    """Test that the staircase finishes straight."""
    path = staircase(Coord(0, 0), Coord(4, 1))
    assert _is_walk(path)
    assert len(path) == manhattan(Coord(0, 0), Coord(4, 1)) + 1
    assert path[-1] == Coord(4, 1)


def test_turning_points_on_a_row():
    """Test turning points of a horizontal pair."""
    assert turning_points(Coord(0, 5), Coord(4, 5)) == [Coord(2, 7), Coord(2, 3)]


def test_one_turn_path_shape():
    """Test the one-turn route is a simple walk between the ends."""
    pattern = GridPattern(GridSpec(10, 10))
    route = one_turn_path(Coord(1, 5), Coord(7, 5), pattern)
    assert route[0] == Coord(1, 5) and route[-1] == Coord(7, 5)
    assert _is_walk(route)
    assert len(set(route)) == len(route)


def test_one_turn_path_falls_back_to_second_branch():
    """Test that a blocked first branch uses the other turning point."""
    pattern = GridPattern(GridSpec(10, 10))
    pattern.set(Coord(4, 8), CellRole.MEAS_Z)
    route = one_turn_path(Coord(1, 5), Coord(7, 5), pattern)
    assert Coord(4, 8) not in route
    assert min(c.y for c in route) < 5


def test_one_turn_path_blocked():
    """Test that two blocked branches raise NoPathError."""
    pattern = GridPattern(GridSpec(10, 10))
    pattern.mark([Coord(4, 8), Coord(4, 2)], CellRole.MEAS_Z)
    with pytest.raises(NoPathError):
        one_turn_path(Coord(1, 5), Coord(7, 5), pattern)
    with pytest.raises(NoPathError):
        one_turn_path(Coord(1, 5), Coord(1, 5), pattern)


def test_one_turn_zipper_marks_interior():
    """Test that only interior cells become X."""
    pattern = GridPattern(GridSpec(6, 6))
    marked = one_turn_zipper(Coord(4, 2), Coord(0, 2), pattern)
    cells = marked.cells_with(CellRole.MEAS_X)
    assert len(cells) == 7
    assert Coord(0, 2) not in cells and Coord(4, 2) not in cells
    assert pattern.marked() == []


def test_one_turn_zipper_marks_end_isolation():
    """Test that cells left on the ends after the chain become Z."""
    pattern = GridPattern(GridSpec(6, 6))
    marked = one_turn_zipper(Coord(4, 2), Coord(0, 2), pattern)
    z_cells = set(marked.cells_with(CellRole.MEAS_Z))
    route = one_turn_path(Coord(0, 2), Coord(4, 2), pattern)

    assert z_cells == set(isolation_cells(route, pattern))
    assert z_cells.isdisjoint(route)
    assert {Coord(5, 2), Coord(4, 1)} <= z_cells


def test_one_turn_path_is_chordless():
    """Test that the route through the turn never touches itself."""
    pattern = GridPattern(GridSpec(20, 20))
    route = one_turn_path(Coord(3, 4), Coord(15, 12), pattern)
    assert is_chordless(route)
    assert _is_walk(route)
    assert not is_chordless([Coord(0, 0), Coord(1, 0), Coord(1, 1), Coord(0, 1)])


def test_dijkstra_route_avoids_obstacles():
    """Test routing around a wall."""
    pattern = GridPattern(GridSpec(7, 7))
    pattern.mark([Coord(3, y) for y in range(0, 6)], CellRole.MEAS_Z)
    route = dijkstra_route(pattern, [Coord(6, 0)], sources=[Coord(0, 0)])
    assert Coord(3, 6) in route.path
    assert _is_walk(route.path)
    assert route.length == 18


def test_dijkstra_straight_penalty_prefers_turns():
    """Test that a straight penalty favours staircases."""
    pattern = GridPattern(GridSpec(8, 8))
    route = dijkstra_route(pattern, [Coord(4, 4)], sources=[Coord(0, 0)], straight_penalty=3)
    assert route.length == 8
    assert route.cost == 8


def test_dijkstra_unreachable():
    """Test NoPathError when the target is walled off."""
    pattern = GridPattern(GridSpec(5, 5))
    pattern.mark([Coord(3, y) for y in range(5)], CellRole.MEAS_Z)
    with pytest.raises(NoPathError):
        dijkstra_route(pattern, [Coord(4, 4)], sources=[Coord(0, 0)])
    with pytest.raises(NoPathError):
        dijkstra_route(pattern, [], sources=[Coord(0, 0)])


def test_dijkstra_nearest_picks_closest():
    """Test nearest-candidate selection from existing path cells."""
    pattern = GridPattern(GridSpec(10, 10))
    pattern.mark([Coord(x, 5) for x in range(2, 6)], CellRole.MEAS_X)
    n, j = dijkstra_nearest(pattern, [Coord(4, 8), Coord(9, 0)])
    assert n == Coord(4, 8)
    assert j.y == 5


def test_free_patches():
    """Test that a wall splits the free cells."""
    pattern = GridPattern(GridSpec(5, 3))
    pattern.mark([Coord(2, y) for y in range(3)], CellRole.MEAS_Z)
    patches = find_free_patches(pattern)
    assert [len(p) for p in patches] == [6, 6]
    assert patches[0].anchor() == Coord(0, 0)
    assert patches[1].anchor() == Coord(3, 0)
