"""
Star collection on a tree of junctions.

Leaves are ordered the way the measurement pattern would reach them: from
the center outwards, always towards the leaf nearest to the cells already
laid. Nearby leaves share a junction; each junction hangs off the center
or an earlier junction through a bridge cell, is zippered to its leaves
and to that bridge, and is finally merged into its parent, deepest first.

The same star can also be made the local way: expand the center and zip
every leaf to it. Both variants are tried and the cheaper one is kept.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Set, Tuple

from src.core.errors import DomainError, NoPathError, PlanningError
from src.lattice.grid import Coord, manhattan
from src.lattice.pattern import CellRole
from src.lattice.search import PATH_ROLES, dijkstra_nearest
from src.lattice.staircase import one_turn_zipper
from src.primitives.builder import PlanBuilder
from src.primitives.merging import merge_at
from src.primitives.plan import Fragment
from src.primitives.ports import close_ports, prepare_ports, route_pair
from src.primitives.zipper import STRAIGHT_PENALTY, zipper_connect

logger = logging.getLogger(__name__)

PAIR_RADIUS = 6
JUNCTION_SEARCH = 3


@dataclass
class Junction:
    """A protected cell collecting up to two leaves below a parent."""

    vertex: int
    bridge: int
    parent: int
    leaves: List[int] = field(default_factory=list)


def connection_order(builder: PlanBuilder, center: Coord, leaves: Sequence[Coord]) -> List[Coord]:
    """
    Leaves in the order the growing pattern reaches them.

    A scratch pattern starts from the center alone; each round picks the
    leaf nearest to the pattern and lays its one-turn route. Leaves no
    route reaches come last, in their given order.
    """
    scratch = builder.pattern.copy()
    for c in scratch.cells_with(*PATH_ROLES):
        scratch.set(c, CellRole.MEAS_Z)
    scratch.clear(center)
    scratch.set(center, CellRole.JUNCTION)

    order: List[Coord] = []
    remaining = list(leaves)
    while remaining:
        try:
            n, j = dijkstra_nearest(scratch, remaining)
        except NoPathError:
            break
        order.append(n)
        remaining.remove(n)
        try:
            scratch = one_turn_zipper(n, j, scratch)
        except (NoPathError, DomainError):
            logger.debug(f"No one-turn route to {tuple(n)}; keeping the pattern as is")
    return order + remaining


def pair_leaves(order: Sequence[Coord]) -> List[List[Coord]]:
    """Pair each leaf with its nearest later neighbor within PAIR_RADIUS; up to three share one group."""
    if len(order) <= 3:
        return [list(order)]
    groups = []
    left = list(order)
    while left:
        first = left.pop(0)
        near = [c for c in left if manhattan(first, c) <= PAIR_RADIUS]
        if near:
            partner = min(near, key=lambda c: manhattan(first, c))
            left.remove(partner)
            groups.append([first, partner])
        else:
            groups.append([first])
    return groups


def _port_is_clean(builder: PlanBuilder, c: Coord, allowed: Set[int]) -> bool:
    if not builder.spec.contains(c) or not builder.pattern.is_free(c):
        return False
    v = builder.vid(c)
    if not builder.alive(v) or v in builder.protected:
        return False
    return all(u in allowed or u not in builder.protected for u in builder.graph.adj[v])


def choose_junction(builder: PlanBuilder, group: Sequence[Coord], parent: Coord) -> Optional[Coord]:
    """
    Free cell closest to the group and its parent with four clean ports.

    A port is clean when it is free and touches no protected vertex other
    than the junction and the group's leaves.
    """
    leaf_ids = {builder.vid(c) for c in group}
    xs = [c.x for c in group]
    ys = [c.y for c in group]
    best = None
    for y in range(min(ys) - JUNCTION_SEARCH, max(ys) + JUNCTION_SEARCH + 1):
        for x in range(min(xs) - JUNCTION_SEARCH, max(xs) + JUNCTION_SEARCH + 1):
            c = Coord(x, y)
            if manhattan(c, parent) < 3 or not _port_is_clean(builder, c, leaf_ids):
                continue
            allowed = leaf_ids | {builder.vid(c)}
            ports = builder.spec.neighbors(c)
            if len(ports) < 4:
                continue
            if not all(builder.vid(p) in leaf_ids or _port_is_clean(builder, p, allowed) for p in ports):
                continue
            key = (sum(manhattan(c, leaf) for leaf in group) + manhattan(c, parent), c.y, c.x)
            if best is None or key < best:
                best = key
    return Coord(best[2], best[1]) if best is not None else None


def choose_bridge(builder: PlanBuilder, parent: int, junction: Coord) -> Optional[int]:
    """Unprotected neighbor of parent, touching no other protected vertex, nearest the junction."""
    candidates = [
        u
        for u in builder.ports(parent)
        if _port_is_clean(builder, builder.coord(u), {parent})
        and u != builder.vid(junction)
    ]
    if not candidates:
        return None
    return min(candidates, key=lambda u: (manhattan(builder.coord(u), junction), u))


def _score(builder: PlanBuilder) -> int:
    """Steps so far plus the clean-up Z measurements the targets still need."""
    loose = {u for v in map(builder.vid, builder.targets.values()) if builder.alive(v) for u in builder.ports(v)}
    return len(builder.steps) + len(loose)


def junction_tree(
    builder: PlanBuilder, center: Coord, leaves: Sequence[Coord], straight_penalty: int = STRAIGHT_PENALTY
) -> List[Junction]:
    """
    Collect the star through junctions.

    Junctions are placed first. Each leaf is then zippered to its junction,
    which is never tried as the X-rule sink first. Every junction is then
    linked to its bridge and merged into its parent, deepest first.

    Returns:
        The junctions, in placement order

    Raises:
        NoPathError: If a junction, bridge or route cannot be placed
        MergePreconditionError: If a merge finds its layout broken
    """
    root = builder.vid(center)
    order = connection_order(builder, center, leaves)
    junctions: List[Junction] = []

    for group in pair_leaves(order):
        nodes = [root] + [j.vertex for j in junctions]
        placed = False
        for parent in sorted(nodes, key=lambda v: min(manhattan(builder.coord(v), c) for c in group)):
            cell = choose_junction(builder, group, builder.coord(parent))
            if cell is None:
                continue
            bridge = choose_bridge(builder, parent, cell)
            if bridge is None:
                continue
            j = builder.vid(cell)
            builder.protected.update((j, bridge))
            junctions.append(Junction(j, bridge, parent, [builder.vid(c) for c in group]))
            placed = True
            break
        if not placed:
            raise NoPathError(f"No room for a junction near {[tuple(c) for c in group]}")

    for junction in junctions:
        cell = builder.coord(junction.vertex)
        for leaf in junction.leaves:
            zipper_connect(
                builder, builder.coord(leaf), cell, isolate=False, straight_penalty=straight_penalty, keep=cell
            )
    for junction in junctions:
        cell = builder.coord(junction.vertex)
        fragment = zipper_connect(
            builder, cell, builder.coord(junction.bridge), isolate=False, straight_penalty=straight_penalty
        )
        logger.debug(f"Junction {tuple(cell)} linked via {fragment.info['mode']}")

    for junction in reversed(junctions):
        builder.isolate(
            builder.ports(junction.vertex) + builder.ports(junction.bridge), tag="star-isolation"
        )
        builder.release(junction.vertex)
        builder.release(junction.bridge)
        merge_at(builder, junction.vertex, junction.bridge, junction.parent)
    return junctions


def _direct_variant(
    builder: PlanBuilder,
    center: Coord,
    leaves: Sequence[Coord],
    reserve: int,
    style: str,
    straight_penalty: int,
) -> None:
    """Expand the center and zip every leaf to it, like the local planner does."""
    root = builder.vid(center)
    ids = [builder.vid(c) for c in leaves]
    with builder.in_phase("prep"):
        hub = prepare_ports(builder, center, ids, reserve, style)
        ends = [prepare_ports(builder, c, [root], reserve, style) for c in leaves]
    for end in ends:
        route_pair(builder, hub, end, straight_penalty)
    close_ports(builder, hub)


def _complete(builder: PlanBuilder, root: int, leaves: Sequence[int], expected: Set[Tuple[int, int]]) -> bool:
    return all(builder.graph.has_edge(root, leaf) for leaf in leaves) and builder.protected_edges() == expected


def collect_star(
    builder: PlanBuilder,
    center: Coord,
    leaves: Sequence[Coord],
    reserve: int = 2,
    style: str = "unidirectional",
    straight_penalty: int = STRAIGHT_PENALTY,
) -> Fragment:
    """
    Connect center to every leaf it is not yet adjacent to.

    A single missing edge is made with the zipper. Otherwise the junction
    tree and the local variant are both planned and the cheaper one, counting
    the clean-up the targets will need, is kept.

    Args:
        builder: Planning state; center and leaves must be protected
        center: Star center cell
        leaves: Leaf cells
        reserve: Spare ports of the local variant
        style: Expansion gadget of the local variant
        straight_penalty: Routing cost of a step that keeps direction

    Returns:
        Fragment whose info holds the variant and the junction cells

    Raises:
        NoPathError: If neither variant can be realized
    """
    root = builder.vid(center)
    pending = [c for c in leaves if not builder.graph.has_edge(root, builder.vid(c))]
    pending_ids = [builder.vid(c) for c in pending]
    expected = builder.protected_edges() | {(min(root, v), max(root, v)) for v in pending_ids}

    with builder.recording("star", center=center) as fragment:
        fragment.info.update(variant="none", junctions=[])
        if len(pending) == 1:
            zipper_connect(builder, center, pending[0], isolate=False, straight_penalty=straight_penalty)
            fragment.info["variant"] = "zipper"
        elif pending:
            cp = builder.checkpoint()
            direct_score = None
            try:
                _direct_variant(builder, center, pending, reserve, style, straight_penalty)
                direct_score = _score(builder)
            except (PlanningError, DomainError) as exc:
                logger.debug(f"Local star at {tuple(center)} failed: {exc}")
            builder.rollback(cp)

            junctions = None
            try:
                junctions = junction_tree(builder, center, pending, straight_penalty)
                if not _complete(builder, root, pending_ids, expected):
                    junctions = None
            except (PlanningError, DomainError) as exc:
                logger.debug(f"Junction tree at {tuple(center)} failed: {exc}")

            if junctions is not None and (direct_score is None or _score(builder) < direct_score):
                fragment.info["variant"] = "tree"
                fragment.info["junctions"] = [builder.coord(j.vertex) for j in junctions]
            else:
                builder.rollback(cp)
                if direct_score is None:
                    raise NoPathError(f"Neither variant collects the star of {tuple(center)}")
                _direct_variant(builder, center, pending, reserve, style, straight_penalty)
                fragment.info["variant"] = "local"

    logger.debug(
        f"Star at {tuple(center)}: {len(pending)} new edges, {fragment.info['variant']}, "
        f"{len(fragment)} steps"
    )
    return fragment
