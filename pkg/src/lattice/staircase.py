"""
Staircase-shaped paths and the one-turn zipper route.

A route from a to b runs along a staircase of slope +1 or -1 out of a up
to a turning point, then along a staircase of the opposite slope into b.
"""

import logging
from typing import Callable, List, Optional

from src.core.errors import NoPathError
from src.core.measurement import measure_in_place
from src.lattice.grid import Coord, cluster_graph
from src.lattice.pattern import CellRole, GridPattern

logger = logging.getLogger(__name__)


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def staircase(p: Coord, q: Coord, x_first: bool = True) -> List[Coord]:
    """
    Cells from p to q alternating x and y steps, then straight.

    Args:
        p: Start cell
        q: End cell
        x_first: Take the first step along x

    Returns:
        Path including both ends
    """
    path = [p]
    x, y = p
    sx, sy = _sign(q.x - x), _sign(q.y - y)
    take_x = x_first
    while (x, y) != (q.x, q.y):
        if (take_x and x != q.x) or y == q.y:
            x += sx
        else:
            y += sy
        take_x = not take_x
        path.append(Coord(x, y))
    return path


def is_chordless(route: List[Coord]) -> bool:
    """True when only consecutive cells of the route are lattice neighbors."""
    for i, p in enumerate(route):
        for q in route[i + 2:]:
            if abs(p.x - q.x) + abs(p.y - q.y) == 1:
                return False
    return True


def turning_points(a: Coord, b: Coord) -> List[Coord]:
    """Both turning points, ascending-first branch before descending-first."""
    x_up = (a.x - a.y + b.x + b.y) // 2
    x_down = (a.x + a.y + b.x - b.y) // 2
    return [
        Coord(x_up, a.y + (x_up - a.x)),
        Coord(x_down, a.y - (x_down - a.x)),
    ]


def one_turn_path(
    a: Coord,
    b: Coord,
    pattern: GridPattern,
    passable: Optional[Callable[[Coord], bool]] = None,
) -> List[Coord]:
    """
    First feasible one-turn staircase route from a to b.

    A branch is feasible when the turning point is on the grid, the route
    is chordless and every interior cell is passable. The first staircase
    starts along x, or along y when that keeps the turn chordless.

    Args:
        a: Start cell
        b: End cell
        pattern: Pattern whose FREE cells may be used
        passable: Predicate for interior cells (default: FREE)

    Returns:
        Route a ... b including both ends

    Raises:
        NoPathError: If both branches are blocked
    """
    if a == b:
        raise NoPathError(f"Route endpoints coincide at {tuple(a)}")
    passable = passable or pattern.is_free

    for turn in turning_points(a, b):
        if not pattern.spec.contains(turn):
            continue
        for x_first in (True, False):
            route = staircase(a, turn, x_first) + staircase(turn, b)[1:]
            if len(set(route)) != len(route) or not is_chordless(route):
                continue
            if all(passable(c) for c in route[1:-1]):
                return route

    raise NoPathError(f"No one-turn staircase between {tuple(a)} and {tuple(b)}")


def isolation_cells(route: List[Coord], pattern: GridPattern) -> List[Coord]:
    """
    Cells the X chain along route leaves attached to its ends.

    The chain is simulated on the unmeasured part of the lattice with the
    first cell as X-rule neighbor; every FREE cell still adjacent to either
    end afterwards needs a Z measurement.
    """
    spec = pattern.spec
    g = cluster_graph(spec)
    ends = (route[0], route[-1])
    g.remove_nodes_from(
        spec.vertex_id(c)
        for c in pattern.marked()
        if c not in ends and pattern.role(c) is not CellRole.TARGET
    )
    sink = spec.vertex_id(route[0])
    for c in route[1:-1]:
        measure_in_place(g, spec.vertex_id(c), "X", 1, sink)

    ids = (sink, spec.vertex_id(route[-1]))
    cells = {spec.coord_of(u) for v in ids for u in g.adj[v] if u not in ids}
    return sorted((c for c in cells if pattern.is_free(c)), key=lambda c: (c.y, c.x))


def one_turn_zipper(n: Coord, j: Coord, pattern: GridPattern) -> GridPattern:
    """Copy of pattern with the one-turn route from j to n marked MEAS_X and its isolation MEAS_Z."""
    route = one_turn_path(j, n, pattern)
    marked = pattern.copy()
    marked.mark(route[1:-1], CellRole.MEAS_X)
    isolation = isolation_cells(route, pattern)
    marked.mark(isolation, CellRole.MEAS_Z)
    logger.debug(
        f"One-turn route {tuple(j)} -> {tuple(n)}: {len(route) - 2} X cells, {len(isolation)} Z cells"
    )
    return marked
