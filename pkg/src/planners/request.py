"""
Extraction requests and their JSON form.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from src.core.errors import DomainError, RequestParseError
from src.lattice.grid import Coord, GridSpec

STRATEGIES = ("lvde", "ovde", "cg")


@dataclass(frozen=True)
class Region:
    """Axis-aligned rectangle of lattice cells."""

    x: int
    y: int
    width: int
    height: int

    def contains(self, c: Coord) -> bool:
        return self.x <= c.x < self.x + self.width and self.y <= c.y < self.y + self.height

    def cells(self) -> FrozenSet[Coord]:
        return frozenset(
            Coord(x, y)
            for y in range(self.y, self.y + self.height)
            for x in range(self.x, self.x + self.width)
        )

    def fits_in(self, spec: GridSpec) -> bool:
        return (
            self.x >= 0
            and self.y >= 0
            and self.x + self.width <= spec.width
            and self.y + self.height <= spec.height
        )

    def to_dict(self) -> Dict[str, int]:
        return {"x": self.x, "y": self.y, "width": self.width, "height": self.height}


@dataclass
class ExtractionRequest:
    """Target vertices on the lattice and the graph wanted between them."""

    grid: GridSpec
    targets: Dict[str, Coord]
    edges: List[Tuple[str, str]] = field(default_factory=list)
    strategy: str = "ovde"
    cg_region: Optional[Region] = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """
        Check labels, coordinates and edges.

        Raises:
            RequestParseError: On any inconsistency
        """
        if self.strategy not in STRATEGIES:
            raise RequestParseError(f"Unknown strategy {self.strategy!r}")
        if not self.targets:
            raise RequestParseError("Request has no targets")

        seen: Dict[Coord, str] = {}
        for label, c in self.targets.items():
            if not self.grid.contains(c):
                raise RequestParseError(f"Target {label!r} at {tuple(c)} lies outside the grid")
            if c in seen:
                raise RequestParseError(f"Targets {seen[c]!r} and {label!r} share cell {tuple(c)}")
            seen[c] = label

        pairs: Set[FrozenSet[str]] = set()
        for a, b in self.edges:
            for label in (a, b):
                if label not in self.targets:
                    raise RequestParseError(f"Edge ({a}, {b}) references unknown label {label!r}")
            if a == b:
                raise RequestParseError(f"Self-loop on {a!r}")
            pair = frozenset((a, b))
            if pair in pairs:
                raise RequestParseError(f"Edge ({a}, {b}) listed twice")
            pairs.add(pair)

        if self.cg_region is not None and not self.cg_region.fits_in(self.grid):
            raise RequestParseError(f"CG region {self.cg_region.to_dict()} leaves the grid")

    @property
    def labels(self) -> List[str]:
        return list(self.targets)

    def edge_set(self) -> Set[FrozenSet[str]]:
        return {frozenset(e) for e in self.edges}

    def target_graph(self) -> nx.Graph:
        """Requested graph on the target labels."""
        g = nx.Graph()
        g.add_nodes_from(self.targets)
        g.add_edges_from(self.edges)
        return g

    def required_degree(self, label: str) -> int:
        return sum(1 for e in self.edges if label in e)

    def with_strategy(self, strategy: str) -> "ExtractionRequest":
        return ExtractionRequest(self.grid, dict(self.targets), list(self.edges), strategy, self.cg_region)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "grid": self.grid.to_dict(),
            "targets": [{"label": k, "x": c.x, "y": c.y} for k, c in self.targets.items()],
            "edges": [list(e) for e in self.edges],
            "strategy": self.strategy,
        }
        if self.cg_region is not None:
            data["cg_region"] = self.cg_region.to_dict()
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExtractionRequest":
        """
        Build a request from parsed JSON.

        Raises:
            RequestParseError: On missing keys, bad types or invalid content
        """
        try:
            grid = GridSpec(int(data["grid"]["width"]), int(data["grid"]["height"]))
            targets: Dict[str, Coord] = {}
            for t in data["targets"]:
                label = str(t["label"])
                if label in targets:
                    raise RequestParseError(f"Duplicate target label {label!r}")
                targets[label] = Coord(int(t["x"]), int(t["y"]))
            edges = []
            for e in data.get("edges", []):
                if len(e) != 2:
                    raise RequestParseError(f"Edge {e!r} must have two labels")
                edges.append((str(e[0]), str(e[1])))
            region = data.get("cg_region")
            if region is not None:
                region = Region(
                    int(region["x"]), int(region["y"]), int(region["width"]), int(region["height"])
                )
            return cls(grid, targets, edges, str(data.get("strategy", "ovde")), region)
        except RequestParseError:
            raise
        except DomainError as exc:
            raise RequestParseError(str(exc)) from exc
        except (KeyError, TypeError, ValueError) as exc:
            raise RequestParseError(f"Malformed request: {exc!r}") from exc

    @classmethod
    def from_json(cls, text: str) -> "ExtractionRequest":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RequestParseError(
                f"Invalid request JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from exc
        if not isinstance(data, dict):
            raise RequestParseError("Request must be a JSON object")
        return cls.from_dict(data)
