"""
GHZ collection: moving a star's center along a measured path.

X-measuring an isolated path p1..pk from the center c to a new vertex
moves the center to that vertex only when k is odd. For even k the
parity fix isolates p1 and pk with one auxiliary Z each, shortens the
path to c - p1 - pk - next with X measurements, Y-measures pk, rewrites
the graph by local complementation at c and finally Y-measures p1.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from src.core.errors import DomainError, SpaceError
from src.core.graph_state import local_complement_in_place, require_vertex
from src.core.measurement import LC, measure_in_place

logger = logging.getLogger(__name__)

GhzOp = Tuple[int, str, Optional[int]]


def _check_path(
    g: nx.Graph, center: int, path: Sequence[int], nxt: int, extras: Sequence[int]
) -> None:
    for v in [center, *path, nxt, *extras]:
        require_vertex(g, v)
    if g.has_edge(center, nxt):
        raise DomainError(f"Next vertex {nxt} is already adjacent to the center {center}")

    chain = [center, *path, nxt]
    for a, b in zip(chain, chain[1:]):
        if not g.has_edge(a, b):
            raise DomainError(f"Collection path misses the edge {a}-{b}")
    for i, p in enumerate(path, start=1):
        allowed = {chain[i - 1], chain[i + 1], *extras}
        stray = sorted(set(g.adj[p]) - allowed)
        if stray:
            raise DomainError(f"Path vertex {p} has a neighbor {stray[0]} outside the path")


def ghz_collect_ops(
    g: nx.Graph,
    center: int,
    path: Sequence[int],
    nxt: int,
    aux: Optional[Tuple[int, int]] = None,
    parity_fix: bool = True,
) -> List[GhzOp]:
    """
    Measurement sequence of one collection step.

    Returns:
        (vertex, basis, X-rule neighbor) triples; basis LC marks a local
        complementation applied as a frame rewrite

    Raises:
        DomainError: If the path is not an isolated chain from center to nxt
        SpaceError: Even path with the fix requested but no aux pair
    """
    path = list(path)
    if not path:
        raise DomainError("Collection path is empty")
    even = len(path) % 2 == 0
    if even and parity_fix and aux is None:
        raise SpaceError(
            f"Even path of length {len(path)} needs two auxiliary vertices", blocking=None
        )
    fix = even and parity_fix
    _check_path(g, center, path, nxt, list(aux) if fix else [])

    if not fix:
        return [(p, "X", center) for p in path]

    first, last = path[0], path[-1]
    ops: List[GhzOp] = [(aux[0], "Z", None), (aux[1], "Z", None)]
    ops += [(p, "X", first) for p in path[1:-1]]
    ops += [(last, "Y", None), (center, LC, None), (first, "Y", None)]
    return ops


def ghz_collect_step(
    g: nx.Graph,
    center: int,
    path: Sequence[int],
    nxt: int,
    aux: Optional[Tuple[int, int]] = None,
    parity_fix: bool = True,
) -> nx.Graph:
    """
    Collect one more vertex into the star centered at center.

    Args:
        g: Graph holding a star at center and the path to nxt
        center: Current star center
        path: Path vertices from the center's side to nxt's side
        nxt: Vertex that should become the new center
        aux: Extra neighbors of the first and last path vertex (even paths)
        parity_fix: Apply the even-length repair

    Returns:
        New graph; nxt is the center unless the path is even and unfixed
    """
    result = g.copy()
    for vertex, basis, b0 in ghz_collect_ops(g, center, path, nxt, aux, parity_fix):
        if basis == LC:
            local_complement_in_place(result, vertex)
        else:
            measure_in_place(result, vertex, basis, 1, b0)

    logger.debug(f"Collected along {len(path)} vertices; {nxt} has degree {result.degree(nxt)}")
    return result
