"""
Lattice searches: nearest-target Dijkstra and free-patch discovery.
"""

import heapq
import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from src.core.errors import NoPathError
from src.lattice.grid import Coord
from src.lattice.pattern import CellRole, GridPattern

logger = logging.getLogger(__name__)

PATH_ROLES = (CellRole.MEAS_X, CellRole.MEAS_Y, CellRole.JUNCTION)


class Route(NamedTuple):
    """Result of a nearest-target search."""

    target: Coord
    junction: Coord
    cost: int
    path: List[Coord]  # junction ... target, both ends included

    @property
    def length(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class Patch:
    """A maximal 4-connected set of FREE cells."""

    cells: FrozenSet[Coord]

    def __len__(self) -> int:
        return len(self.cells)

    def anchor(self) -> Coord:
        return min(self.cells, key=lambda c: (c.y, c.x))


def junction_admissible(pattern: GridPattern, c: Coord) -> bool:
    """A junction needs two FREE neighbors: one for the branch, one spare."""
    return sum(1 for n in pattern.spec.neighbors(c) if pattern.is_free(n)) >= 2


def dijkstra_route(
    pattern: GridPattern,
    targets: Iterable[Coord],
    sources: Optional[Iterable[Coord]] = None,
    passable: Optional[Callable[[Coord], bool]] = None,
    straight_penalty: int = 1,
) -> Route:
    """
    Multi-source Dijkstra from pattern cells to the nearest target.

    Moves are 4-neighbor steps through passable cells. A target is entered
    only as the final hop. Each step costs 1, or straight_penalty when it
    continues in the direction of the previous step.

    Args:
        pattern: Measurement pattern
        targets: Candidate end cells
        sources: Start cells; defaults to admissible path cells of the pattern
        passable: Predicate for intermediate cells (default: FREE)
        straight_penalty: Cost of a step that keeps direction

    Returns:
        Route to the cheapest target

    Raises:
        NoPathError: If no target is reachable
    """
    goal = set(targets)
    if not goal:
        raise NoPathError("No candidate targets given")
    passable = passable or pattern.is_free

    if sources is None:
        marked = pattern.cells_with(*PATH_ROLES)
        sources = [c for c in marked if junction_admissible(pattern, c)] or marked
    sources = sorted(set(sources), key=lambda c: (c.y, c.x))
    if not sources:
        raise NoPathError("Pattern has no cells to start from")

    State = Tuple[Coord, Optional[Tuple[int, int]]]
    best: Dict[State, int] = {}
    parent: Dict[State, Optional[State]] = {}
    heap: List[Tuple[int, int, int, int, Tuple]] = []
    counter = 0

    for s in sources:
        state = (s, None)
        best[state] = 0
        parent[state] = None
        heapq.heappush(heap, (0, s.y, s.x, counter, state))
        counter += 1

    while heap:
        cost, _, _, _, state = heapq.heappop(heap)
        if cost > best.get(state, cost):
            continue
        cell, heading = state
        if cell in goal and parent[state] is not None:
            return _build_route(state, parent, cost)
        if cell in goal:
            continue

        for nxt in pattern.spec.neighbors(cell):
            if not (nxt in goal or passable(nxt)):
                continue
            step = (nxt.x - cell.x, nxt.y - cell.y)
            new_cost = cost + (straight_penalty if step == heading else 1)
            new_state = (nxt, step)
            if new_cost < best.get(new_state, new_cost + 1):
                best[new_state] = new_cost
                parent[new_state] = state
                heapq.heappush(heap, (new_cost, nxt.y, nxt.x, counter, new_state))
                counter += 1

    raise NoPathError(f"None of {sorted(goal)} is reachable through free cells")


def _build_route(state, parent, cost: int) -> Route:
    path = []
    while state is not None:
        path.append(state[0])
        state = parent[state]
    path.reverse()
    return Route(target=path[-1], junction=path[0], cost=cost, path=path)


def dijkstra_nearest(pattern: GridPattern, candidates: Iterable[Coord]) -> Tuple[Coord, Coord]:
    """Return (next cell n, junction j) for the candidate closest to the pattern."""
    route = dijkstra_route(pattern, candidates)
    logger.debug(f"Nearest {tuple(route.target)} from {tuple(route.junction)}, cost {route.cost}")
    return route.target, route.junction


def find_free_patches(pattern: GridPattern) -> List[Patch]:
    """
    Maximal 4-connected components of FREE cells, by breadth-first search.

    Returns:
        Patches ordered by their top-left cell
    """
    seen = set()
    patches = []
    for start in pattern.spec.coords():
        if start in seen or not pattern.is_free(start):
            continue
        component = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            cell = queue.popleft()
            for nxt in pattern.spec.neighbors(cell):
                if nxt not in seen and pattern.is_free(nxt):
                    seen.add(nxt)
                    component.add(nxt)
                    queue.append(nxt)
        patches.append(Patch(frozenset(component)))
    return patches
