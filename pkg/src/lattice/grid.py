"""
Rectangular cluster lattice: coordinates and the grid graph.
"""

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple

import networkx as nx

from src.core.errors import DomainError


class Coord(NamedTuple):
    """Zero-based lattice site; y grows downwards in renderings."""

    x: int
    y: int

    def shifted(self, dx: int, dy: int) -> "Coord":
        return Coord(self.x + dx, self.y + dy)


DIRECTIONS = {
    "up": Coord(0, -1),
    "down": Coord(0, 1),
    "left": Coord(-1, 0),
    "right": Coord(1, 0),
}


@dataclass(frozen=True)
class GridSpec:
    """Width and height of the lattice in sites."""

    width: int
    height: int

    def __post_init__(self):
        if self.width < 2 or self.height < 2:
            raise DomainError(f"Grid must be at least 2x2, got {self.width}x{self.height}")

    @property
    def size(self) -> int:
        return self.width * self.height

    def contains(self, c: Coord) -> bool:
        return 0 <= c.x < self.width and 0 <= c.y < self.height

    def vertex_id(self, c: Coord) -> int:
        if not self.contains(c):
            raise DomainError(f"{tuple(c)} lies outside the {self.width}x{self.height} grid")
        return c.y * self.width + c.x

    def coord_of(self, vertex: int) -> Coord:
        if not 0 <= vertex < self.size:
            raise DomainError(f"Vertex {vertex} lies outside the grid")
        return Coord(vertex % self.width, vertex // self.width)

    def neighbors(self, c: Coord) -> List[Coord]:
        """In-grid 4-neighbors in the fixed order right, down, left, up."""
        steps = (Coord(1, 0), Coord(0, 1), Coord(-1, 0), Coord(0, -1))
        return [n for n in (c.shifted(*s) for s in steps) if self.contains(n)]

    def coords(self) -> Iterator[Coord]:
        for y in range(self.height):
            for x in range(self.width):
                yield Coord(x, y)

    def to_dict(self) -> dict:
        return {"width": self.width, "height": self.height}


def cluster_graph(spec: GridSpec) -> nx.Graph:
    """
    Grid graph with 4-neighbor edges and vertex id = y * width + x.

    Args:
        spec: Lattice dimensions

    Returns:
        The 2D cluster-state graph
    """
    g = nx.Graph()
    g.add_nodes_from(range(spec.size))
    for c in spec.coords():
        v = spec.vertex_id(c)
        if c.x + 1 < spec.width:
            g.add_edge(v, v + 1)
        if c.y + 1 < spec.height:
            g.add_edge(v, v + spec.width)
    return g


def manhattan(a: Coord, b: Coord) -> int:
    return abs(a.x - b.x) + abs(a.y - b.y)
