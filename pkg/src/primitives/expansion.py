"""
Vertex-degree expansion gadgets.

Unidirectional: each application isolates a bridge next to v with two Z
measurements and contracts it with two Y measurements, adding two net
neighbors to v. U-shaped: a central block plus two arms that grow along a
row above v, so that every new stub sits on the same side.
"""

import logging
from typing import List, Sequence, Tuple

from src.core.errors import DomainError, SpaceError
from src.lattice.grid import DIRECTIONS, Coord
from src.primitives.builder import PlanBuilder
from src.primitives.plan import Fragment

logger = logging.getLogger(__name__)

Op = Tuple[Coord, str]


def _perpendicular(d: Coord) -> Coord:
    return Coord(d.y, d.x) if d.x == 0 else Coord(0, d.x)


def _check_footprint(
    builder: PlanBuilder, v: Coord, cells: Sequence[Coord], measured: Sequence[Coord]
) -> None:
    hub = builder.vid(v) if builder.spec.contains(v) else None
    for c in cells:
        if not builder.spec.contains(c):
            raise SpaceError(f"Expansion footprint leaves the grid at {tuple(c)}", blocking=tuple(c))
        if not builder.pattern.is_free(c) or builder.vid(c) in builder.protected:
            raise SpaceError(f"Expansion footprint blocked at {tuple(c)}", blocking=tuple(c))
    for c in measured:
        if any(u in builder.protected and u != hub for u in builder.graph.adj[builder.vid(c)]):
            raise SpaceError(f"Expansion footprint touches a target at {tuple(c)}", blocking=tuple(c))


def unidirectional_ops(v: Coord, direction: str, n_exp: int) -> Tuple[List[Op], List[Coord]]:
    """
    Measurement order and new stub cells of n_exp unidirectional applications.

    Returns:
        Tuple of (ops, stubs)
    """
    if direction not in DIRECTIONS:
        raise DomainError(f"Unknown direction {direction!r}")
    d = DIRECTIONS[direction]
    p = _perpendicular(d)
    ops: List[Op] = []
    stubs: List[Coord] = []
    for k in range(n_exp):
        y3 = v.shifted((1 + 2 * k) * d.x, (1 + 2 * k) * d.y)
        y1 = y3.shifted(d.x, d.y)
        ops += [
            (y3.shifted(p.x, p.y), "Z"),
            (y3.shifted(-p.x, -p.y), "Z"),
            (y1, "Y"),
            (y3, "Y"),
        ]
        stubs += [y1.shifted(p.x, p.y), y1.shifted(-p.x, -p.y)]
    stubs.append(v.shifted((1 + 2 * n_exp) * d.x, (1 + 2 * n_exp) * d.y))
    return ops, stubs


def u_shaped_ops(v: Coord, n_exp: int) -> Tuple[List[Op], List[Coord]]:
    """
    Measurement order and new stub cells of the upward U-shaped expansion.

    Returns:
        Tuple of (ops, stubs)
    """
    x, y = v
    r = y - 2
    ops: List[Op] = [
        (Coord(x - 1, y - 1), "Z"),
        (Coord(x + 1, y - 1), "Z"),
        (Coord(x, y - 3), "Z"),
        (Coord(x, y - 2), "Y"),
        (Coord(x, y - 1), "Y"),
        (Coord(x, y + 1), "Z"),
    ]
    stubs: List[Coord] = []
    for i in range(n_exp):
        for side in (1, -1):
            c = x + side * (1 + 2 * i)
            ops.append((Coord(c, r - 1), "Z"))
            if i > 0:
                ops.append((Coord(c, r + 1), "Z"))
            ops += [
                (Coord(c + side, r + 1), "Z"),
                (Coord(c + side, r), "Y"),
                (Coord(c, r), "Y"),
            ]
            stubs.append(Coord(c + side, r - 1))
    for k in range(n_exp + 1):
        ops += [(Coord(x + 1 + 2 * k, r - 2), "Z"), (Coord(x - 1 - 2 * k, r - 2), "Z")]
    tip = 1 + 2 * n_exp
    ops += [(Coord(x + tip, r + 1), "Z"), (Coord(x - tip, r + 1), "Z")]
    stubs += [Coord(x + tip, r), Coord(x - tip, r)]
    return ops, stubs


def _apply(
    builder: PlanBuilder,
    v: Coord,
    ops: List[Op],
    stubs: List[Coord],
    kind: str,
    n_exp: int,
    **info,
) -> Fragment:
    if n_exp < 1:
        raise DomainError(f"n_exp must be at least 1, got {n_exp}")
    measured = [c for c, _ in ops]
    _check_footprint(builder, v, measured + stubs, measured)

    vid = builder.vid(v)
    if not builder.alive(vid):
        raise DomainError(f"Vertex {tuple(v)} was already measured")
    before = builder.graph.degree(vid)
    cp = builder.checkpoint()

    with builder.recording(kind, vertex=v, n_exp=n_exp, stubs=stubs, **info) as fragment:
        for c, basis in ops:
            builder.measure(builder.vid(c), basis, f"{kind}-{basis}")

    grown = builder.graph.degree(vid) - before
    if grown != 2 * n_exp or not all(builder.graph.has_edge(vid, builder.vid(s)) for s in stubs):
        builder.rollback(cp)
        raise SpaceError(
            f"Expansion at {tuple(v)} met unexpected adjacency (degree +{grown})", blocking=tuple(v)
        )
    builder.n_exp += n_exp
    logger.debug(f"{kind} at {tuple(v)}: degree {before} -> {before + grown}")
    return fragment


def expand_degree(builder: PlanBuilder, v: Coord, direction: str, n_exp: int = 1) -> Fragment:
    """
    Raise the degree of v by 2 * n_exp using 4 * n_exp measurements.

    Args:
        builder: Planning state
        v: Vertex to expand
        direction: "up", "down", "left" or "right"
        n_exp: Number of applications

    Returns:
        Fragment whose info["stubs"] lists the new neighbor cells

    Raises:
        SpaceError: If a footprint cell is off-grid, measured or protected
    """
    ops, stubs = unidirectional_ops(v, direction, n_exp)
    return _apply(builder, v, ops, stubs, "expansion", n_exp, direction=direction)


def expand_degree_u_shaped(builder: PlanBuilder, v: Coord, n_exp: int = 1) -> Fragment:
    """
    Raise the degree of v by 2 * n_exp with 12 * n_exp + 8 measurements.

    The gadget opens upward; its stubs all sit above v.

    Raises:
        SpaceError: If a footprint cell is off-grid, measured or protected
    """
    ops, stubs = u_shaped_ops(v, n_exp)
    return _apply(builder, v, ops, stubs, "u-expansion", n_exp, direction="up")
