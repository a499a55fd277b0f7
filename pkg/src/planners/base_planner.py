"""
Abstract base class for all extraction planners.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, FrozenSet, Optional, Set

from src.core.errors import NoPathError, PlanningError
from src.planners.cost import cost_report
from src.planners.request import ExtractionRequest
from src.primitives.builder import PlanBuilder
from src.primitives.plan import CostReport, Plan
from src.primitives.wire import toggle_edge

logger = logging.getLogger(__name__)


class BasePlanner(ABC):
    """Template for planners: realize, repair, isolate, check."""

    name = "base"

    def __init__(self, config: Dict[str, Any] = None):
        """
        Initialize planner.

        Args:
            config: Planner configuration block
        """
        self.config = config or {}
        self.last_plan: Optional[Plan] = None

    @abstractmethod
    def _realize(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        """
        Emit the strategy's measurements.

        Args:
            builder: Planning state with the request's targets protected
            request: The request being planned
        """
        pass

    def plan(self, request: ExtractionRequest, base: Optional[Plan] = None) -> Plan:
        """
        Plan a request, optionally on top of an earlier plan.

        Args:
            request: Targets and edges to extract
            base: Plan whose measurements and targets are kept

        Returns:
            Plan whose predicted graph contains the requested graph on the
            targets as an isolated component

        Raises:
            PlanningError: If the strategy cannot realize the request
        """
        logger.info(
            f"{self.name}: {len(request.targets)} targets, {len(request.edges)} edges "
            f"on {request.grid.width}x{request.grid.height}"
        )
        builder = PlanBuilder(request.grid, request.targets, base)
        self._realize(builder, request)
        self._repair(builder, request)
        self._cleanup(builder, request)
        self._check(builder, request)

        builder.metadata["n_exp"] = builder.n_exp
        plan = builder.build(self.name, list(request.edges), CostReport())
        plan.stats = cost_report(plan)
        self.last_plan = plan
        logger.info(f"{self.name}: {plan.stats.total} measurements")
        return plan

    def _mismatches(self, builder: PlanBuilder, request: ExtractionRequest) -> Set[FrozenSet[str]]:
        return builder.target_edges(request.labels) ^ request.edge_set()

    def _repair(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        """Toggle every target pair whose adjacency is still wrong."""
        for pair in sorted(self._mismatches(builder, request), key=sorted):
            a, b = sorted(pair)
            logger.debug(f"{self.name}: repairing {a}-{b}")
            try:
                toggle_edge(builder, builder.target_vertex(a), builder.target_vertex(b), tag="repair")
            except NoPathError as exc:
                raise PlanningError(f"Cannot route edge {a}-{b}: {exc}", element=(a, b)) from exc

    def _cleanup(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        """Z-measure every unprotected neighbor of the request's targets."""
        ports = [u for label in request.labels for u in builder.ports(builder.target_vertex(label))]
        builder.isolate(ports, tag="final-isolation")

    def _check(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        wrong = self._mismatches(builder, request)
        if wrong:
            a, b = sorted(next(iter(wrong)))
            raise PlanningError(f"Edge {a}-{b} does not match the request", element=(a, b))

        own = {builder.target_vertex(label) for label in request.labels}
        for v in own:
            stray = set(builder.graph.adj[v]) - own
            if stray:
                raise PlanningError(
                    f"Target {tuple(builder.coord(v))} still touches {tuple(builder.coord(min(stray)))}",
                    element=tuple(builder.coord(v)),
                )

    def get_statistics(self) -> Dict[str, Any]:
        """Get planner statistics."""
        stats = {"planner": self.__class__.__name__, "strategy": self.name}
        if self.last_plan is not None:
            stats.update(self.last_plan.stats.to_dict())
        return stats
