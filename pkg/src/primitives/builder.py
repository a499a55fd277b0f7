"""
Incremental plan construction on a simulated graph.

The builder owns the tracked graph and applies every measurement it
records through the graph rules (outcome +1), so primitives can inspect
the real post-measurement adjacency before deciding their next step.
"""

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from src.core.errors import DomainError
from src.core.measurement import measure_in_place
from src.lattice.grid import Coord, GridSpec, cluster_graph
from src.lattice.pattern import CellRole, GridPattern
from src.primitives.plan import JUNCTION_TAG, CostReport, Fragment, Plan, PlanStep

logger = logging.getLogger(__name__)


@dataclass
class Checkpoint:
    graph: nx.Graph
    pattern: GridPattern
    n_steps: int
    n_exp: int
    protected: Set[int]
    targets: Dict[str, Coord]


class PlanBuilder:
    """Mutable planning state: graph, pattern, steps and protected vertices."""

    def __init__(self, spec: GridSpec, targets: Dict[str, Coord], base: Optional[Plan] = None):
        """
        Initialize builder.

        Args:
            spec: Lattice dimensions
            targets: Target label to cell
            base: Earlier plan on the same lattice to build on top of
        """
        self.spec = spec
        self.targets: Dict[str, Coord] = {}
        self.steps: List[PlanStep] = []
        self.n_exp = 0
        self.phase = "connect"
        self.metadata: Dict[str, object] = {}

        if base is not None:
            if base.grid != spec:
                raise DomainError("Base plan was made for a different lattice")
            self.graph = base.predicted_graph.copy()
            self.pattern = base.pattern()
            self.steps = list(base.steps)
            self.targets.update(base.targets)
        else:
            self.graph = cluster_graph(spec)
            self.pattern = GridPattern(spec)

        for label, c in targets.items():
            if label in self.targets:
                raise DomainError(f"Target label {label!r} already used")
            if self.vid(c) not in self.graph:
                raise DomainError(f"Target {label!r} sits on measured cell {tuple(c)}")
            self.targets[label] = c
            self.pattern.set(c, CellRole.TARGET)

        self.protected: Set[int] = {self.vid(c) for c in self.targets.values()}

    def vid(self, c: Coord) -> int:
        return self.spec.vertex_id(c)

    def coord(self, v: int) -> Coord:
        return self.spec.coord_of(v)

    def target_vertex(self, label: str) -> int:
        return self.vid(self.targets[label])

    def alive(self, v: int) -> bool:
        return v in self.graph

    def ports(self, v: int) -> List[int]:
        """Unprotected neighbors of v."""
        return sorted(u for u in self.graph.adj[v] if u not in self.protected)

    def measure(self, v: int, basis: str, tag: str = "", b0: Optional[int] = None) -> None:
        """
        Record a measurement and apply its graph rule.

        Args:
            v: Vertex to measure
            basis: "X", "Y" or "Z"
            tag: Label of the primitive that asked for it
            b0: Neighbor for the X rule; stored in the step so replays agree

        Raises:
            DomainError: If v is protected, already measured or sits on a
                target cell, or b0 is not adjacent to v
        """
        if v in self.protected:
            raise DomainError(f"Refusing to measure protected vertex {v}")
        if v not in self.graph:
            raise DomainError(f"Vertex {v} was already measured")
        c = self.coord(v)
        if self.pattern.role(c) is CellRole.TARGET:
            raise DomainError(f"Refusing to measure target cell {tuple(c)}")
        if b0 is not None and basis != "X":
            raise DomainError(f"A neighbor choice only applies to X, not {basis}")

        _, chosen = measure_in_place(self.graph, v, basis, 1, b0)
        role = CellRole.JUNCTION if tag == JUNCTION_TAG else CellRole.for_basis(basis)
        self.pattern.set(c, role)
        neighbor = self.coord(chosen) if b0 is not None else None
        self.steps.append(PlanStep(c, basis, len(self.steps), tag, self.phase, neighbor))

    def release(self, v: int) -> None:
        """Unprotect v so it can be measured; a target on v stops being one."""
        self.protected.discard(v)
        c = self.coord(v)
        for label in [label for label, t in self.targets.items() if t == c]:
            del self.targets[label]
            self.pattern.clear(c)

    def isolate(self, vertices: Iterable[int], tag: str = "isolation") -> int:
        """Z-measure each still-present vertex; returns how many were measured."""
        count = 0
        for v in sorted(set(vertices)):
            if v in self.graph:
                self.measure(v, "Z", tag)
                count += 1
        return count

    def checkpoint(self) -> Checkpoint:
        return Checkpoint(
            self.graph.copy(),
            self.pattern.copy(),
            len(self.steps),
            self.n_exp,
            set(self.protected),
            dict(self.targets),
        )

    def rollback(self, cp: Checkpoint) -> None:
        self.graph = cp.graph
        self.pattern = cp.pattern
        del self.steps[cp.n_steps:]
        self.n_exp = cp.n_exp
        self.protected = cp.protected
        self.targets = cp.targets

    @contextmanager
    def recording(self, kind: str, **info) -> Iterator[Fragment]:
        """Collect the steps appended inside the block into a Fragment."""
        start = len(self.steps)
        fragment = Fragment(kind, info=dict(info))
        yield fragment
        fragment.steps = self.steps[start:]
        logger.debug(f"{kind}: {len(fragment.steps)} steps")

    @contextmanager
    def in_phase(self, phase: str) -> Iterator[None]:
        previous, self.phase = self.phase, phase
        try:
            yield
        finally:
            self.phase = previous

    def target_edges(self, labels: Optional[Iterable[str]] = None) -> Set[FrozenSet[str]]:
        """Current edges among the given target labels (all targets by default)."""
        labels = list(self.targets if labels is None else labels)
        ids = {label: self.target_vertex(label) for label in labels}
        edges = set()
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                if self.graph.has_edge(ids[a], ids[b]):
                    edges.add(frozenset((a, b)))
        return edges

    def protected_edges(self) -> Set[Tuple[int, int]]:
        """Current edges with both endpoints protected."""
        return {
            (min(a, b), max(a, b))
            for a in self.protected
            for b in self.graph.adj[a]
            if b in self.protected
        }

    def build(self, strategy: str, edges: List[Tuple[str, str]], stats: CostReport) -> Plan:
        return Plan(
            grid=self.spec,
            targets=dict(self.targets),
            edges=list(edges),
            steps=list(self.steps),
            predicted_graph=self.graph.copy(),
            stats=stats,
            strategy=strategy,
            metadata=dict(self.metadata),
        )
