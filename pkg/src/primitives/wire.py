"""
Edge toggling through isolated chains.

A chordless chain v - p1 - ... - pk - w whose interior has no other
neighbors contracts under Y measurements of p1..pk to a single edge
toggle between v and w. Isolation uses Z measurements on every
off-chain neighbor of the interior.
"""

import logging
from typing import Collection, List, Optional, Set

import networkx as nx

from src.core.errors import DomainError, NoPathError
from src.lattice.grid import Coord
from src.primitives.builder import PlanBuilder
from src.primitives.plan import Fragment

logger = logging.getLogger(__name__)


def chain_candidates(
    builder: PlanBuilder,
    v: int,
    w: int,
    region: Optional[Collection[Coord]] = None,
    avoid: Collection[int] = (),
) -> Set[int]:
    """
    Vertices that may serve as chain interior between v and w.

    A candidate is alive and unprotected, touches no protected vertex other
    than v and w, and (with a region) lies in the region together with all
    of its neighbors. Vertices in avoid and their neighbors are excluded so
    that the isolation never measures an avoided vertex.
    """
    allowed = set()
    endpoints = {v, w}
    avoid = set(avoid)
    for u in builder.graph.nodes():
        if u in builder.protected or u in avoid:
            continue
        adjacent = builder.graph.adj[u]
        if any(x in builder.protected and x not in endpoints for x in adjacent):
            continue
        if any(x in avoid for x in adjacent):
            continue
        if region is not None:
            if builder.coord(u) not in region:
                continue
            if any(builder.coord(x) not in region for x in adjacent if x not in endpoints):
                continue
        allowed.add(u)
    return allowed


def find_chain(g: nx.Graph, v: int, w: int, allowed: Set[int]) -> List[int]:
    """
    Shortest v-w path through allowed vertices, ignoring the edge v-w.

    A shortest path of an induced subgraph has no chords, which is what the
    contraction needs.

    Args:
        g: Current graph
        v: Start vertex
        w: End vertex
        allowed: Admissible interior vertices

    Returns:
        Path v ... w including both ends

    Raises:
        NoPathError: If no such chain exists
    """
    interior = set(allowed) - {v, w}
    sub = nx.Graph(g.subgraph(interior | {v, w}))
    if sub.has_edge(v, w):
        sub.remove_edge(v, w)
    try:
        return nx.shortest_path(sub, v, w)
    except nx.NetworkXNoPath as exc:
        raise NoPathError(f"No isolated chain between {v} and {w}") from exc


def toggle_edge(
    builder: PlanBuilder,
    v: int,
    w: int,
    tag: str = "wire",
    region: Optional[Collection[Coord]] = None,
    avoid: Collection[int] = (),
) -> Fragment:
    """
    Add or remove the edge v-w through an isolated chain.

    Args:
        builder: Planning state
        v: First endpoint
        w: Second endpoint
        tag: Tag of the Y contraction steps
        region: Cells the chain and its isolation must stay in
        avoid: Vertices the chain and its isolation must leave alone

    Returns:
        Fragment with the isolation and contraction steps

    Raises:
        DomainError: If v equals w or either endpoint is gone
        NoPathError: If no admissible chain exists
    """
    if v == w:
        raise DomainError(f"Cannot toggle a self-loop on {v}")
    for u in (v, w):
        if not builder.alive(u):
            raise DomainError(f"Vertex {u} was already measured")

    allowed = chain_candidates(builder, v, w, region, avoid)
    chain = find_chain(builder.graph, v, w, allowed)
    interior = chain[1:-1]
    had_edge = builder.graph.has_edge(v, w)

    with builder.recording("wire", v=v, w=w, chain=[builder.coord(u) for u in chain]) as fragment:
        on_chain = set(chain)
        off_chain = {x for u in interior for x in builder.graph.adj[u] if x not in on_chain}
        builder.isolate(off_chain, tag=f"{tag}-isolation")
        for u in interior:
            builder.measure(u, "Y", tag)

    if builder.graph.has_edge(v, w) == had_edge:
        raise DomainError(f"Chain contraction failed to toggle {v}-{w}")
    logger.debug(f"Toggled {v}-{w} with a {len(interior)}-vertex chain")
    return fragment
