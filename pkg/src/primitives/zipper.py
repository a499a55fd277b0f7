"""
Zipper connection between two distant protected vertices.
"""

import logging
from typing import List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.core.errors import NoPathError
from src.lattice.grid import Coord
from src.lattice.search import dijkstra_route
from src.lattice.staircase import one_turn_path
from src.primitives.builder import PlanBuilder
from src.primitives.plan import Fragment
from src.primitives.wire import toggle_edge

logger = logging.getLogger(__name__)

STRAIGHT_PENALTY = 3


def is_induced(builder: PlanBuilder, route: Sequence[Coord]) -> bool:
    """True when the tracked graph joins only consecutive route cells."""
    ids = [builder.vid(c) for c in route]
    position = {v: i for i, v in enumerate(ids)}
    for i, v in enumerate(ids):
        if v not in builder.graph:
            return False
        for u in builder.graph.adj[v]:
            j = position.get(u)
            if j is not None and abs(i - j) > 1:
                return False
    return True


def _route(
    builder: PlanBuilder, va: int, vb: int, a: Coord, b: Coord, straight_penalty: int
) -> Optional[List[Coord]]:
    ends = {va, vb}

    def passable(c: Coord) -> bool:
        v = builder.vid(c)
        if not (builder.pattern.is_free(c) and builder.alive(v)) or v in builder.protected:
            return False
        # a path cell next to a third protected vertex would hand it to a
        return all(u in ends or u not in builder.protected for u in builder.graph.adj[v])

    try:
        route = one_turn_path(a, b, builder.pattern, passable)
        if is_induced(builder, route):
            return route
    except NoPathError:
        pass
    for penalty in dict.fromkeys((straight_penalty, 1)):
        try:
            route = dijkstra_route(
                builder.pattern, [b], sources=[a], passable=passable, straight_penalty=penalty
            ).path
        except NoPathError:
            break
        if is_induced(builder, route):
            return route

    # geodesics of an induced subgraph have no chords
    allowed = [v for v in builder.graph.nodes() if passable(builder.coord(v))]
    sub = nx.Graph(builder.graph.subgraph(allowed + [va, vb]))
    try:
        return [builder.coord(v) for v in nx.shortest_path(sub, va, vb)]
    except nx.NetworkXNoPath:
        return None


def zipper_connect(
    builder: PlanBuilder,
    a: Coord,
    b: Coord,
    isolate: bool = True,
    straight_penalty: int = STRAIGHT_PENALTY,
    keep: Optional[Coord] = None,
) -> Fragment:
    """
    Connect the protected cells a and b.

    The staircase route (or a penalised Dijkstra route) is X-measured on a
    trial basis, walking away from one endpoint and using it as the X-rule
    neighbor of every path cell. The trial is kept when it adds exactly the
    edge a-b among protected vertices; otherwise it is rolled back and the
    edge is made by an isolated chain instead.

    Args:
        builder: Planning state
        a: First endpoint cell
        b: Second endpoint cell
        isolate: Z-measure the remaining unprotected neighbors of a and b
        straight_penalty: Routing cost of a step that keeps direction
        keep: Endpoint whose free neighbors must stay in place, tried as
            sink last

    Returns:
        Fragment whose info holds the mode ("adjacent", "x-chain" or "wire")

    Raises:
        NoPathError: If neither realisation is possible
    """
    va, vb = builder.vid(a), builder.vid(b)
    kept = None if keep is None else builder.vid(keep)
    with builder.recording("zipper", a=a, b=b) as fragment:
        if builder.graph.has_edge(va, vb):
            fragment.info["mode"] = "adjacent"
            if isolate:
                builder.isolate(builder.ports(va) + builder.ports(vb), tag="zipper-isolation")
        elif x_chain(builder, va, vb, isolate, straight_penalty, keep=kept):
            fragment.info["mode"] = "x-chain"
        else:
            toggle_edge(builder, va, vb, tag="zipper-wire")
            if isolate:
                builder.isolate(builder.ports(va) + builder.ports(vb), tag="zipper-isolation")
            fragment.info["mode"] = "wire"

    logger.debug(f"Zipper {tuple(a)} -> {tuple(b)}: {fragment.info['mode']}, {len(fragment)} steps")
    return fragment


def sink_order(builder: PlanBuilder, va: int, vb: int, keep: Optional[int] = None) -> List[int]:
    """Sink candidates: keep last, endpoints without protected neighbors first."""
    return sorted(
        (va, vb), key=lambda v: (v == keep, any(u in builder.protected for u in builder.graph.adj[v]))
    )


def x_chain(
    builder: PlanBuilder,
    va: int,
    vb: int,
    isolate: bool = False,
    straight_penalty: int = STRAIGHT_PENALTY,
    tag: str = "zipper-path",
    keep: Optional[int] = None,
) -> bool:
    """
    X-measure a chordless route between va and vb so that they become adjacent.

    Each path cell is measured with the sink endpoint as b0, which hands the
    cell's neighborhood to the sink; the last one adds the edge. With an odd
    number of path cells the sink's earlier neighbors end up on the far end,
    so a sink with protected neighbors only works on even routes. Every
    attempt is checked against the protected edges and rolled back when
    anything besides va-vb changed.

    Returns:
        True when the edge was made, False with the builder untouched
    """
    a, b = builder.coord(va), builder.coord(vb)
    route = _route(builder, va, vb, a, b, straight_penalty)
    if route is None:
        return False
    expected = builder.protected_edges() ^ {(min(va, vb), max(va, vb))}

    for sink in sink_order(builder, va, vb, keep):
        path = route if sink == va else route[::-1]
        cp = builder.checkpoint()
        if _walk(builder, sink, path, tag):
            if isolate:
                builder.isolate(builder.ports(va) + builder.ports(vb), tag="zipper-isolation")
            if builder.graph.has_edge(va, vb) and builder.protected_edges() == expected:
                return True
        builder.rollback(cp)
    return _bridge(builder, va, vb, expected, isolate, straight_penalty, tag)


def _bridge(
    builder: PlanBuilder,
    va: int,
    vb: int,
    expected: Set[Tuple[int, int]],
    isolate: bool,
    straight_penalty: int,
    tag: str,
) -> bool:
    """
    Close a-b through a spare neighbor p of one endpoint.

    The X chain runs from the far endpoint into p with p as sink. On an even
    route p keeps near and gains far, so a Y measurement on p adds the edge;
    on an odd one near already moved onto far and p is Z-measured away.
    """
    for near, far in ((vb, va), (va, vb)):
        for p in builder.ports(near):
            if any(u in builder.protected and u != near for u in builder.graph.adj[p]):
                continue
            cp = builder.checkpoint()
            builder.protected.add(p)
            route = _route(builder, far, p, builder.coord(far), builder.coord(p), straight_penalty)
            if route is not None and _walk(builder, p, route[::-1], tag):
                builder.isolate(builder.ports(p), tag="zipper-isolation")
                both = set(builder.graph.adj[p]) == {near, far}
                builder.release(p)
                builder.measure(p, "Y" if both else "Z", "zipper-bridge")
                if isolate:
                    builder.isolate(builder.ports(va) + builder.ports(vb), tag="zipper-isolation")
                if builder.protected_edges() == expected:
                    return True
            builder.rollback(cp)
    return False


def _walk(builder: PlanBuilder, sink: int, path: Sequence[Coord], tag: str) -> bool:
    for c in path[1:-1]:
        v = builder.vid(c)
        if not builder.graph.has_edge(v, sink):
            return False
        builder.measure(v, "X", tag, b0=sink)
    return True
