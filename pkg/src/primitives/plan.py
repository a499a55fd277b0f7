"""
Plan data types and their JSON form.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from src.core.errors import RequestParseError
from src.core.graph_state import graph_from_dict, graph_to_dict
from src.lattice.grid import Coord, GridSpec
from src.lattice.pattern import CellRole, GridPattern

JUNCTION_TAG = "merge-junction"


@dataclass(frozen=True)
class PlanStep:
    """One single-qubit measurement in a plan; b0 is the X-rule neighbor when pinned."""

    coord: Coord
    basis: str
    order: int
    tag: str = ""
    phase: str = "connect"
    b0: Optional[Coord] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "x": self.coord.x,
            "y": self.coord.y,
            "basis": self.basis,
            "order": self.order,
            "tag": self.tag,
            "phase": self.phase,
        }
        if self.b0 is not None:
            data["b0"] = [self.b0.x, self.b0.y]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PlanStep":
        b0 = data.get("b0")
        return cls(
            coord=Coord(int(data["x"]), int(data["y"])),
            basis=str(data["basis"]),
            order=int(data["order"]),
            tag=str(data.get("tag", "")),
            phase=str(data.get("phase", "connect")),
            b0=Coord(int(b0[0]), int(b0[1])) if b0 is not None else None,
        )


@dataclass
class CostReport:
    """Measurement counts and the scale parameters of the request."""

    n_x: int = 0
    n_y: int = 0
    n_z: int = 0
    total: int = 0
    n_prep: int = 0
    n_connect: int = 0
    n_e: int = 0
    n_l: int = 0
    N: int = 0
    N_c: int = 0
    n_exp: int = 0

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CostReport":
        return cls(**{k: int(v) for k, v in data.items() if k in cls.__dataclass_fields__})


@dataclass
class Fragment:
    """Steps appended by one primitive, plus what it produced."""

    kind: str
    steps: List[PlanStep] = field(default_factory=list)
    info: Dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.steps)

    def count(self, basis: str) -> int:
        return sum(1 for s in self.steps if s.basis == basis)


@dataclass
class Plan:
    """Ordered measurements that extract the requested graph."""

    grid: GridSpec
    targets: Dict[str, Coord]
    edges: List[Tuple[str, str]]
    steps: List[PlanStep]
    predicted_graph: nx.Graph
    stats: CostReport
    strategy: str = ""
    metadata: Dict[str, Any] = field(default_factory=dict)

    def step_pairs(self) -> List[Tuple[int, str, Optional[int]]]:
        """Steps as (vertex id, basis, X-rule neighbor id or None) in order."""
        vid = self.grid.vertex_id
        return [(vid(s.coord), s.basis, vid(s.b0) if s.b0 is not None else None) for s in self.steps]

    def pattern(self) -> GridPattern:
        """Measurement pattern implied by the steps."""
        pattern = GridPattern(self.grid)
        for c in self.targets.values():
            pattern.set(c, CellRole.TARGET)
        for step in self.steps:
            role = CellRole.JUNCTION if step.tag == JUNCTION_TAG else CellRole.for_basis(step.basis)
            pattern.set(step.coord, role)
        return pattern

    def target_vertices(self) -> Dict[str, int]:
        return {label: self.grid.vertex_id(c) for label, c in self.targets.items()}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "grid": self.grid.to_dict(),
            "strategy": self.strategy,
            "targets": [
                {"label": label, "x": c.x, "y": c.y} for label, c in self.targets.items()
            ],
            "edges": [list(e) for e in self.edges],
            "steps": [s.to_dict() for s in self.steps],
            "predicted_graph": graph_to_dict(self.predicted_graph),
            "stats": self.stats.to_dict(),
            "metadata": self.metadata,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Plan":
        try:
            grid = GridSpec(int(data["grid"]["width"]), int(data["grid"]["height"]))
            return cls(
                grid=grid,
                targets={t["label"]: Coord(int(t["x"]), int(t["y"])) for t in data["targets"]},
                edges=[(str(a), str(b)) for a, b in data.get("edges", [])],
                steps=[PlanStep.from_dict(s) for s in data["steps"]],
                predicted_graph=graph_from_dict(data["predicted_graph"]),
                stats=CostReport.from_dict(data.get("stats", {})),
                strategy=str(data.get("strategy", "")),
                metadata=dict(data.get("metadata", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise RequestParseError(f"Malformed plan: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "Plan":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RequestParseError(
                f"Invalid plan JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from exc
        return cls.from_dict(data)
