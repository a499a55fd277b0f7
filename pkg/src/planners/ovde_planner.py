"""
Optimized vertex-degree expansion planner.

Vertices are handled one at a time in descending required degree; each
collects the star of its edges that are not yet established, either on a
tree of junctions or locally, whichever is cheaper.
"""

import logging
from typing import Any, Dict, List, Optional

from src.core.errors import NoPathError, PlanningError
from src.planners.base_planner import BasePlanner
from src.planners.request import ExtractionRequest
from src.primitives.builder import PlanBuilder
from src.primitives.plan import Plan
from src.primitives.star import collect_star
from src.primitives.zipper import STRAIGHT_PENALTY

logger = logging.getLogger(__name__)


class OVDEPlanner(BasePlanner):
    """Collect each vertex's remaining star on a junction tree."""

    name = "ovde"

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(config)
        self.reserve_ports = int(self.config.get("reserve_ports", 2))
        self.expansion = self.config.get("expansion", "unidirectional")
        self.straight_penalty = int(self.config.get("straight_penalty", STRAIGHT_PENALTY))

    def vertex_order(self, request: ExtractionRequest) -> List[str]:
        """Descending required degree, ties by label."""
        return sorted(request.labels, key=lambda label: (-request.required_degree(label), label))

    def _realize(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        done = set()
        stars = []
        for label in self.vertex_order(request):
            leaves = [
                b if a == label else a
                for a, b in request.edges
                if label in (a, b) and (b if a == label else a) not in done
            ]
            done.add(label)
            if not leaves:
                continue
            try:
                fragment = collect_star(
                    builder,
                    request.targets[label],
                    [request.targets[leaf] for leaf in leaves],
                    self.reserve_ports,
                    self.expansion,
                    self.straight_penalty,
                )
            except NoPathError as exc:
                raise PlanningError(f"Cannot collect the star of {label}: {exc}", element=label) from exc
            stars.append(
                {
                    "center": label,
                    "leaves": sorted(leaves),
                    "steps": len(fragment),
                    "variant": fragment.info["variant"],
                    "junctions": len(fragment.info["junctions"]),
                }
            )
            logger.info(
                f"ovde: star of {label} with {len(leaves)} leaves, "
                f"{fragment.info['variant']}, {len(fragment)} steps"
            )
        builder.metadata["stars"] = stars


def plan_ovde(request: ExtractionRequest, config: Optional[Dict[str, Any]] = None) -> Plan:
    """Plan a request by collecting stars through junction trees."""
    return OVDEPlanner(config).plan(request)
