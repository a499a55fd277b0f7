"""
Five-vertex star around a degree-4 hub.
"""

import logging
from itertools import permutations
from typing import Dict, Sequence

from src.core.errors import AdjacencyError, DegreeError, DomainError, NoPathError
from src.lattice.grid import Coord, manhattan
from src.primitives.builder import PlanBuilder
from src.primitives.merging import merge_at
from src.primitives.plan import Fragment
from src.primitives.zipper import zipper_connect

logger = logging.getLogger(__name__)


def contact_cell(a: Coord, yellow: Coord) -> Coord:
    """Cell beyond the yellow neighbor, seen from the hub."""
    return Coord(2 * yellow.x - a.x, 2 * yellow.y - a.y)


def assign_neighbors(builder: PlanBuilder, hub: int, endpoints: Sequence[int]) -> Dict[int, int]:
    """Match each endpoint to a hub neighbor, minimising the distance from its contact cell."""
    a = builder.coord(hub)
    neighbors = sorted(builder.graph.adj[hub])
    best = None
    for order in permutations(neighbors):
        cost = sum(
            manhattan(contact_cell(a, builder.coord(y)), builder.coord(e)) for y, e in zip(order, endpoints)
        )
        if best is None or cost < best[0]:
            best = (cost, dict(zip(endpoints, order)))
    return best[1]


def hub_connect_degree4(builder: PlanBuilder, a: Coord, endpoints: Sequence[Coord]) -> Fragment:
    """
    Turn the hub a and four protected endpoints into a star centered at a.

    Every endpoint gets one of a's four yellow neighbors and the junction
    contact just beyond it. The endpoint is zippered to its contact, the
    other contacts of yellow and junction are Z-measured, and the merging
    tool then Y-measures junction and yellow, handing the endpoint to a.

    Args:
        builder: Planning state; a and the endpoints must be protected
        a: Hub cell
        endpoints: Four endpoint cells

    Returns:
        Fragment of the zippers, isolations and merges

    Raises:
        DegreeError: If a does not have exactly four neighbors
        AdjacencyError: If an endpoint is adjacent to a
        NoPathError: If a contact cell is unusable or a zipper cannot be routed
    """
    if len(endpoints) != 4:
        raise DomainError(f"Hub needs four endpoints, got {len(endpoints)}")
    hub = builder.vid(a)
    ends = [builder.vid(e) for e in endpoints]
    for v in [hub] + ends:
        if v not in builder.protected:
            raise DomainError(f"Hub vertex {tuple(builder.coord(v))} is not a target")

    degree = builder.graph.degree(hub)
    if degree != 4:
        raise DegreeError(f"Hub {tuple(a)} has degree {degree}, needs 4", element=tuple(a))
    for e, c in zip(ends, endpoints):
        if builder.graph.has_edge(hub, e):
            raise AdjacencyError(f"Endpoint {tuple(c)} is adjacent to the hub", element=tuple(c))

    assignment = assign_neighbors(builder, hub, ends)
    contacts = {}
    for e, yellow in assignment.items():
        c = contact_cell(a, builder.coord(yellow))
        if not builder.spec.contains(c) or not builder.pattern.is_free(c) or not builder.alive(builder.vid(c)):
            raise NoPathError(f"No junction contact beyond {tuple(builder.coord(yellow))}")
        if builder.vid(c) in builder.protected:
            raise NoPathError(f"Junction contact {tuple(c)} is taken")
        contacts[e] = builder.vid(c)

    cp = builder.checkpoint()
    try:
        with builder.recording("hub", hub=a, endpoints=list(endpoints)) as fragment:
            builder.protected.update(assignment.values())
            builder.protected.update(contacts.values())
            for e in ends:
                zipper_connect(builder, builder.coord(e), builder.coord(contacts[e]), isolate=False)

            for e in ends:
                yellow, contact = assignment[e], contacts[e]
                builder.isolate(builder.ports(yellow) + builder.ports(contact), tag="hub-isolation")
                builder.release(yellow)
                builder.release(contact)
                merge_at(builder, contact, yellow, hub)

            builder.isolate([u for v in [hub] + ends for u in builder.ports(v)], tag="hub-isolation")
    except NoPathError:
        builder.rollback(cp)
        raise

    logger.debug(f"Hub at {tuple(a)} connected with {len(fragment)} steps")
    return fragment
