"""
Local vertex-degree expansion planner.

Every target first gets enough free neighbors for its edges plus a small
reserve, through degree-expansion gadgets; then every edge is routed on
its own with the zipper. A vertex that needs more than one gadget shares
its edges with a sub-hub, which is merged back once its edges are made.
"""

import logging
from typing import Any, Dict, List, Optional

from src.core.errors import MergePreconditionError, NoPathError, PlanningError
from src.planners.base_planner import BasePlanner
from src.planners.request import ExtractionRequest
from src.primitives.builder import PlanBuilder
from src.primitives.plan import Plan
from src.primitives.ports import PortSetup, close_ports, prepare_ports, route_pair
from src.primitives.zipper import STRAIGHT_PENALTY

logger = logging.getLogger(__name__)


class LVDEPlanner(BasePlanner):
    """Expand each vertex locally, then connect edges individually."""

    name = "lvde"

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(config)
        self.reserve_ports = int(self.config.get("reserve_ports", 2))
        self.expansion = self.config.get("expansion", "unidirectional")
        self.straight_penalty = int(self.config.get("straight_penalty", STRAIGHT_PENALTY))
        self.split_ports = bool(self.config.get("split_ports", True))

    def _realize(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        setups: Dict[str, PortSetup] = {}
        with builder.in_phase("prep"):
            for label in request.labels:
                setups[label] = prepare_ports(
                    builder,
                    request.targets[label],
                    self.pending_partners(builder, request, label),
                    self.reserve_ports,
                    self.expansion,
                    self.split_ports,
                )
                if setups[label].fragments:
                    logger.info(f"lvde: {label} expanded with {len(setups[label].fragments)} gadget(s)")
        builder.metadata["expansions"] = {
            label: setup.summary() for label, setup in setups.items() if setup.fragments
        }

        for a, b in request.edges:
            try:
                fragment = route_pair(builder, setups[a], setups[b], self.straight_penalty)
            except NoPathError as exc:
                raise PlanningError(f"Cannot route edge {a}-{b}: {exc}", element=(a, b)) from exc
            logger.info(f"lvde: edge {a}-{b} via {fragment.info['mode']}, {len(fragment)} steps")

        for label, setup in setups.items():
            try:
                if close_ports(builder, setup) is not None:
                    logger.info(f"lvde: merged the sub-hub of {label}")
            except MergePreconditionError as exc:
                raise PlanningError(f"Cannot merge the sub-hub of {label}: {exc}", element=label) from exc

    def pending_partners(self, builder: PlanBuilder, request: ExtractionRequest, label: str) -> List[int]:
        """Partners of label's requested edges that are not adjacent yet."""
        v = builder.target_vertex(label)
        partners = []
        for a, b in request.edges:
            if label in (a, b):
                other = builder.target_vertex(b if a == label else a)
                if not builder.graph.has_edge(v, other):
                    partners.append(other)
        return partners


def plan_lvde(request: ExtractionRequest, config: Optional[Dict[str, Any]] = None) -> Plan:
    """Plan a request with local vertex degree expansion."""
    return LVDEPlanner(config).plan(request)
