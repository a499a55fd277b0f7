"""
Port preparation for vertices that route several edges on their own.

A vertex that lacks free neighbors for its pending edges gets a degree
expansion. When more than one application is needed the work is split:
a sub-hub two cells away, joined through a bridge cell, takes its own
expansion and the edges that lie on its side, and is merged back into the
vertex once those edges are in place.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from src.core.errors import DomainError, SpaceError
from src.lattice.grid import DIRECTIONS, Coord, manhattan
from src.primitives.builder import PlanBuilder
from src.primitives.expansion import expand_degree, expand_degree_u_shaped
from src.primitives.merging import merge_at
from src.primitives.plan import Fragment
from src.primitives.zipper import STRAIGHT_PENALTY, zipper_connect

logger = logging.getLogger(__name__)

DIRECTION_ORDER = ("right", "down", "left", "up")
OPPOSITE = {"right": "left", "left": "right", "up": "down", "down": "up"}


@dataclass
class PortSetup:
    """Expansions made for one vertex and the sub-hub serving part of its edges."""

    vertex: int
    fragments: List[Fragment] = field(default_factory=list)
    hub: Optional[int] = None
    bridge: Optional[int] = None
    served: Set[int] = field(default_factory=set)
    split: bool = False

    def endpoint(self, other: int) -> int:
        """Vertex that routes the edge towards other."""
        return self.hub if other in self.served else self.vertex

    def summary(self) -> Dict[str, object]:
        expansions = [
            {"kind": f.kind, "n_exp": f.info["n_exp"], "direction": f.info["direction"], "steps": len(f)}
            for f in self.fragments
        ]
        return {"expansions": expansions, "sub_hub": self.split}


def expand_any(
    builder: PlanBuilder,
    c: Coord,
    n_exp: int,
    style: str = "unidirectional",
    directions: Sequence[str] = DIRECTION_ORDER,
) -> Optional[Fragment]:
    """
    First expansion gadget that fits at c, or None.

    The U-shaped gadget is tried first with style "u_shaped" and last
    otherwise.
    """
    attempts = [("up", expand_degree_u_shaped)] if style == "u_shaped" else []
    attempts += [(d, expand_degree) for d in directions]
    if style != "u_shaped":
        attempts.append(("up", expand_degree_u_shaped))

    for direction, gadget in attempts:
        try:
            if gadget is expand_degree:
                return gadget(builder, c, direction, n_exp)
            return gadget(builder, c, n_exp)
        except SpaceError as exc:
            logger.debug(f"{gadget.__name__} {direction} at {tuple(c)} blocked: {exc}")
    return None


def _clean_cell(builder: PlanBuilder, c: Coord, allowed: Sequence[int]) -> bool:
    if not builder.pattern.is_free(c):
        return False
    v = builder.vid(c)
    if not builder.alive(v) or v in builder.protected:
        return False
    return all(u in allowed or u not in builder.protected for u in builder.graph.adj[v])


def _sides(builder: PlanBuilder, c: Coord, others: Sequence[int]) -> List[Tuple[int, str]]:
    """Directions ordered by how many pending partners lie closer to the sub-hub."""
    ranked = []
    for direction in DIRECTION_ORDER:
        d = DIRECTIONS[direction]
        hub = c.shifted(2 * d.x, 2 * d.y)
        count = sum(
            1 for o in others if manhattan(hub, builder.coord(o)) < manhattan(c, builder.coord(o))
        )
        ranked.append((-count, direction))
    return sorted(ranked, key=lambda r: (r[0], DIRECTION_ORDER.index(r[1])))


def _split(
    builder: PlanBuilder, c: Coord, others: Sequence[int], n_exp: int, reserve: int, style: str
) -> Optional[PortSetup]:
    v = builder.vid(c)
    for negative, direction in _sides(builder, c, others):
        if negative == 0:
            break
        d = DIRECTIONS[direction]
        bridge_cell, hub_cell = c.shifted(d.x, d.y), c.shifted(2 * d.x, 2 * d.y)
        if not (builder.spec.contains(hub_cell) and _clean_cell(builder, bridge_cell, [v])):
            continue
        if not _clean_cell(builder, hub_cell, []):
            continue

        cp = builder.checkpoint()
        bridge, hub = builder.vid(bridge_cell), builder.vid(hub_cell)
        builder.protected.update((bridge, hub))
        own = expand_any(builder, c, 1, style, directions=(OPPOSITE[direction],))
        sub = None
        if own is not None:
            sides = [direction] + [x for x in DIRECTION_ORDER if x not in (direction, OPPOSITE[direction])]
            sub = expand_any(builder, hub_cell, max(1, n_exp - 1), "unidirectional", directions=sides)
        if own is None or sub is None:
            builder.rollback(cp)
            continue

        capacity = max(1, len(builder.ports(hub)) - reserve)
        nearer = sorted(
            (o for o in others if manhattan(hub_cell, builder.coord(o)) < manhattan(c, builder.coord(o))),
            key=lambda o: manhattan(hub_cell, builder.coord(o)),
        )
        sub.info["sub_hub"] = hub_cell
        logger.info(f"Split ports of {tuple(c)} with a sub-hub at {tuple(hub_cell)}")
        return PortSetup(v, [own, sub], hub, bridge, set(nearer[:capacity]), split=True)
    return None


def prepare_ports(
    builder: PlanBuilder,
    c: Coord,
    others: Sequence[int],
    reserve: int = 2,
    style: str = "unidirectional",
    split: bool = True,
) -> PortSetup:
    """
    Give c enough free neighbors for edges towards others plus a reserve.

    Args:
        builder: Planning state; c must be protected
        c: Vertex cell
        others: Partners of the pending edges
        reserve: Spare ports on top of one per edge
        style: "unidirectional" or "u_shaped"
        split: Allow a sub-hub when one application is not enough

    Returns:
        PortSetup; without room for a gadget it holds no fragments
    """
    v = builder.vid(c)
    setup = PortSetup(v)
    if not others:
        return setup
    missing = len(others) + reserve - len(builder.ports(v))
    if missing <= 0:
        return setup
    n_exp = math.ceil(missing / 2)

    if split and n_exp > 1:
        planned = _split(builder, c, others, n_exp, reserve, style)
        if planned is not None:
            return planned

    fragment = expand_any(builder, c, n_exp, style)
    if fragment is None:
        logger.warning(f"No room to expand {tuple(c)}; routing with {len(builder.ports(v))} ports")
    else:
        setup.fragments.append(fragment)
    return setup


def close_ports(builder: PlanBuilder, setup: PortSetup) -> Optional[Fragment]:
    """
    Merge the sub-hub into its vertex; no-op without a sub-hub.

    Raises:
        DomainError: If the sub-hub was measured in the meantime
    """
    if setup.hub is None:
        return None
    hub, bridge = setup.hub, setup.bridge
    if not (builder.alive(hub) and builder.alive(bridge)):
        raise DomainError(f"Sub-hub {tuple(builder.coord(hub))} was measured before its merge")
    builder.isolate(builder.ports(hub) + builder.ports(bridge), tag="sub-hub-isolation")
    builder.release(hub)
    builder.release(bridge)
    fragment = merge_at(builder, hub, bridge, setup.vertex)
    setup.hub = setup.bridge = None
    return fragment


def route_pair(
    builder: PlanBuilder,
    first: PortSetup,
    second: PortSetup,
    straight_penalty: int = STRAIGHT_PENALTY,
) -> Fragment:
    """
    Zipper the edge between two prepared vertices, through their sub-hubs where assigned.

    An endpoint with strictly more free neighbors is never tried as the
    X-rule sink first.
    """
    va = first.endpoint(second.vertex)
    vb = second.endpoint(first.vertex)
    na, nb = len(builder.ports(va)), len(builder.ports(vb))
    keep = None if na == nb else (va if na > nb else vb)
    return zipper_connect(
        builder,
        builder.coord(va),
        builder.coord(vb),
        isolate=False,
        straight_penalty=straight_penalty,
        keep=None if keep is None else builder.coord(keep),
    )
