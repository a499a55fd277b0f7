"""
Central generation planner.

Stage 1 derives a logical CZ/SWAP schedule on a line of qubits. Stage 2
realizes it inside a free rectangle: every qubit gets a holder on the
rectangle's inner ring, the line follows the holders around the ring, and
each CZ is a chain toggle through the interior. A SWAP moves no vertex;
the later CZ chains of the swapped qubit are rerouted across the holders
it passed. Each holder keeps one exit cell on the outer ring, which no
chain touches. Stage 3 transports every holder onto its target through
its exit, trying transport orders until one fits.
"""

import logging
import math
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from src.core.errors import DomainError, MergePreconditionError, NoPathError, PlanningError
from src.lattice.grid import Coord, manhattan
from src.lattice.search import find_free_patches
from src.planners.base_planner import BasePlanner
from src.planners.request import ExtractionRequest, Region
from src.primitives.builder import PlanBuilder
from src.primitives.plan import Plan
from src.primitives.transport import transport_vertex
from src.primitives.wire import toggle_edge

logger = logging.getLogger(__name__)

Gate = Tuple[str, str, str]

MAX_TRANSPORTS = 200
def gate_schedule(labels: List[str], edges: List[Tuple[str, str]]) -> List[Gate]:
    """
    CZ/SWAP sequence that creates the edges on a line of qubits.

    Each vertex in label order walks towards its nearest pending partner,
    emitting CZ when it meets one and SWAP while it still has partners left.

    Args:
        labels: Initial line order
        edges: Requested edges

    Returns:
        List of ("CZ" | "SWAP", u, w)
    """
    line = list(labels)
    pending: Dict[str, Set[str]] = {label: set() for label in labels}
    for a, b in edges:
        pending[a].add(b)
        pending[b].add(a)

    schedule: List[Gate] = []
    for u in labels:
        while pending[u]:
            i = line.index(u)
            nearest = min(pending[u], key=lambda p: (abs(line.index(p) - i), line.index(p)))
            step = 1 if line.index(nearest) > i else -1
            w = line[i + step]
            if w in pending[u]:
                schedule.append(("CZ", u, w))
                pending[u].discard(w)
                pending[w].discard(u)
            if pending[u]:
                schedule.append(("SWAP", u, w))
                line[i], line[i + step] = w, u
    return schedule


def region_size(n_vertices: int, n_cz: int) -> Tuple[int, int]:
    """Width and height of the generation rectangle."""
    return 2 * n_vertices + 1, 3 * max(1, n_cz) + 3


def holder_slots(region: Region) -> Dict[Coord, Coord]:
    """
    Inner-ring cells of region that may hold an output, with their exit.

    The exit is the single outer-ring neighbor; the inner ring's corners
    have two and are left out.
    """
    left, right = region.x + 1, region.x + region.width - 2
    top, bottom = region.y + 1, region.y + region.height - 2
    slots = {}
    for c in region.cells():
        if not (left <= c.x <= right and top <= c.y <= bottom):
            continue
        outward = []
        if c.x == left:
            outward.append(Coord(c.x - 1, c.y))
        if c.x == right:
            outward.append(Coord(c.x + 1, c.y))
        if c.y == top:
            outward.append(Coord(c.x, c.y - 1))
        if c.y == bottom:
            outward.append(Coord(c.x, c.y + 1))
        if len(outward) == 1:
            slots[c] = outward[0]
    return slots


def assign_holders(region: Region, targets: Dict[str, Coord], labels: Sequence[str]) -> Dict[str, Coord]:
    """
    Slot nearest to each target, keeping holders at least three cells apart.

    A gap of two is accepted when three leaves some label without a slot.

    Raises:
        PlanningError: If the inner ring cannot hold every label
    """
    slots = holder_slots(region)
    for gap in (3, 2):
        chosen: Dict[str, Coord] = {}
        for label in labels:
            t = targets[label]
            ranked = sorted(slots, key=lambda c: (manhattan(c, t), c.y, c.x))
            free = [c for c in ranked if all(manhattan(c, h) >= gap for h in chosen.values())]
            if not free:
                break
            chosen[label] = free[0]
        if len(chosen) == len(labels):
            return chosen
    raise PlanningError(
        f"Region {region.to_dict()} has no room for {len(labels)} holders", element=region.to_dict()
    )


def ring_order(region: Region, holders: Dict[str, Coord]) -> List[str]:
    """Labels by the angle of their holder around the region center."""
    cx = region.x + (region.width - 1) / 2
    cy = region.y + (region.height - 1) / 2
    return sorted(holders, key=lambda label: (math.atan2(holders[label].y - cy, holders[label].x - cx), label))


def crossings(line: List[str], schedule: List[Gate]) -> Dict[str, List[str]]:
    """For each CZ, the holders its chain is rerouted across, from the starting line."""
    position = {label: i for i, label in enumerate(line)}
    result = {}
    for op, u, w in schedule:
        if op != "CZ":
            continue
        lo, hi = sorted((position[u], position[w]))
        result[f"{u}-{w}"] = line[lo + 1:hi]
    return result


class CGPlanner(BasePlanner):
    """Generate the graph centrally, then transport it to the targets."""

    name = "cg"

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(config)
        self.margin = int(self.config.get("region_margin", 1))

    def _realize(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        labels = request.labels
        n_cz = len(request.edges)
        self._separate_targets(builder, request)
        region = self._place_region(builder, request, *region_size(len(labels), n_cz))

        cells = assign_holders(region, request.targets, labels)
        exits = holder_slots(region)
        holder = {label: builder.vid(c) for label, c in cells.items()}
        exit_of = {label: builder.vid(exits[c]) for label, c in cells.items()}
        builder.protected.update(holder.values())

        line = ring_order(region, cells)
        schedule = gate_schedule(line, request.edges)
        gates = [(u, w) for op, u, w in schedule if op == "CZ"]
        logger.info(f"cg: schedule of {len(schedule)} gates, {len(gates)} CZ on line {line}")

        position = {label: i for i, label in enumerate(line)}
        interior = region.cells()
        for u, w in sorted(gates, key=lambda g: abs(position[g[0]] - position[g[1]])):
            self._cz(builder, holder[u], holder[w], interior, list(exit_of.values()), (u, w))

        self._transport_all(builder, line, holder, exit_of)

        builder.metadata["schedule"] = [list(g) for g in schedule]
        builder.metadata["line"] = line
        builder.metadata["crossings"] = crossings(line, schedule)
        builder.metadata["region"] = region.to_dict()
        builder.metadata["outputs"] = {label: list(c) for label, c in cells.items()}

    def _cz(
        self,
        builder: PlanBuilder,
        u: int,
        w: int,
        interior: FrozenSet[Coord],
        exits: List[int],
        gate: Tuple[str, str],
    ) -> None:
        """Toggle u-w inside the region, or around it when the inside is blocked."""
        try:
            toggle_edge(builder, u, w, tag="cg-cz", region=interior, avoid=exits)
            return
        except NoPathError:
            logger.debug(f"cg: CZ{gate} blocked inside the region, rerouting around it")
        try:
            toggle_edge(builder, u, w, tag="cg-cz", avoid=exits)
        except NoPathError as exc:
            raise PlanningError(f"No room for CZ({gate[0]},{gate[1]}): {exc}", element=gate) from exc

    def _transport_all(
        self, builder: PlanBuilder, line: List[str], holder: Dict[str, int], exit_of: Dict[str, int]
    ) -> None:
        """
        Transport every holder onto its target, backtracking over the order.

        Raises:
            PlanningError: If no order found within MAX_TRANSPORTS attempts
                moves every holder
        """
        budget = MAX_TRANSPORTS

        def distance(label: str) -> int:
            return manhattan(builder.coord(holder[label]), builder.targets[label])

        def place(remaining: List[str]) -> bool:
            nonlocal budget
            if not remaining:
                return True
            for label in sorted(remaining, key=lambda x: (distance(x), x)):
                if budget <= 0:
                    return False
                budget -= 1
                rest = [x for x in remaining if x != label]
                cp = builder.checkpoint()
                try:
                    transport_vertex(
                        builder,
                        holder[label],
                        builder.target_vertex(label),
                        avoid=[exit_of[x] for x in rest],
                    )
                except (NoPathError, MergePreconditionError, DomainError) as exc:
                    logger.debug(f"cg: transport of {label} failed: {exc}")
                    builder.rollback(cp)
                    continue
                if place(rest):
                    return True
                builder.rollback(cp)
            return False

        if not place(list(line)):
            raise PlanningError(f"Cannot transport the outputs of {line} onto their targets", element=line)
        logger.info(f"cg: transported {len(line)} outputs in {MAX_TRANSPORTS - budget} attempts")

    def _separate_targets(self, builder: PlanBuilder, request: ExtractionRequest) -> None:
        """Remove every edge that already joins two targets."""
        for a, b in sorted(builder.target_edges(request.labels), key=sorted):
            a, b = sorted((a, b))
            try:
                toggle_edge(builder, builder.target_vertex(a), builder.target_vertex(b), tag="cg-separate")
            except NoPathError as exc:
                raise PlanningError(f"Cannot separate {a}-{b}: {exc}", element=(a, b)) from exc

    def _fits(self, builder: PlanBuilder, region: Region, free: Set[Coord]) -> bool:
        if not region.fits_in(builder.spec):
            return False
        if not region.cells() <= free:
            return False
        for c in builder.targets.values():
            if (
                region.x - self.margin <= c.x < region.x + region.width + self.margin
                and region.y - self.margin <= c.y < region.y + region.height + self.margin
            ):
                return False
        return True

    def _place_region(
        self, builder: PlanBuilder, request: ExtractionRequest, width: int, height: int
    ) -> Region:
        """
        Use the requested rectangle or the free one closest to the grid center.

        Raises:
            PlanningError: If no rectangle of the required size is available
        """
        free: Set[Coord] = set()
        for patch in find_free_patches(builder.pattern):
            free |= patch.cells

        if request.cg_region is not None:
            given = request.cg_region
            if given.width < width or given.height < height:
                raise PlanningError(
                    f"CG region needs {width}x{height}, request gives {given.width}x{given.height}",
                    element=given.to_dict(),
                )
            region = Region(given.x, given.y, width, height)
            if not self._fits(builder, region, free):
                raise PlanningError(
                    f"CG region {given.to_dict()} is not free of targets and measurements",
                    element=given.to_dict(),
                )
            return region

        best: Optional[Tuple[float, int, int]] = None
        center_x = (builder.spec.width - width) / 2
        center_y = (builder.spec.height - height) / 2
        for y in range(builder.spec.height - height + 1):
            for x in range(builder.spec.width - width + 1):
                if not self._fits(builder, Region(x, y, width, height), free):
                    continue
                key = (abs(x - center_x) + abs(y - center_y), y, x)
                if best is None or key < best:
                    best = key
        if best is None:
            raise PlanningError(
                f"CG needs a free {width}x{height} region on the "
                f"{builder.spec.width}x{builder.spec.height} grid",
                element=(width, height),
            )
        region = Region(best[2], best[1], width, height)
        logger.info(f"cg: region {region.to_dict()}")
        return region


def plan_cg(request: ExtractionRequest, config: Optional[Dict[str, Any]] = None) -> Plan:
    """Plan a request by central generation and transport."""
    return CGPlanner(config).plan(request)
