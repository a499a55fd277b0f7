"""
Moving a vertex's adjacency onto a distant target.
"""

import logging
from typing import Collection

from src.core.errors import DomainError
from src.primitives.builder import PlanBuilder
from src.primitives.merging import merge_at
from src.primitives.plan import Fragment
from src.primitives.wire import chain_candidates, find_chain

logger = logging.getLogger(__name__)


def transport_vertex(builder: PlanBuilder, source: int, target: int, avoid: Collection[int] = ()) -> Fragment:
    """
    Hand the neighbors of source over to target and measure source away.

    An isolated chain source - p1 - ... - pk - target is contracted to
    source - p1 - target by Y-measuring p2..pk; the merging tool then moves
    N(source) onto target.

    Args:
        builder: Planning state; source and target are protected
        source: Vertex whose protected neighbors move
        target: Receiving vertex, not adjacent to source
        avoid: Vertices the chain and its isolation must leave alone

    Returns:
        Fragment of the transport

    Raises:
        DomainError: If source and target are adjacent
        NoPathError: If no isolated chain exists
        MergePreconditionError: If target already touches N(source)
    """
    if builder.graph.has_edge(source, target):
        raise DomainError(f"Transport endpoints {source} and {target} are adjacent")

    chain = find_chain(builder.graph, source, target, chain_candidates(builder, source, target, avoid=avoid))
    bridge = chain[1]

    with builder.recording("transport", source=builder.coord(source), target=builder.coord(target)) as fragment:
        builder.isolate([u for u in builder.ports(source) if u != bridge], tag="transport-isolation")
        on_chain = set(chain)
        builder.isolate(
            {x for u in chain[1:-1] for x in builder.graph.adj[u] if x not in on_chain},
            tag="transport-isolation",
        )
        for u in chain[2:-1]:
            builder.measure(u, "Y", "transport-chain")

        builder.release(source)
        merge_at(builder, source, bridge, target)

    logger.debug(f"Transported {source} -> {target} over {len(chain) - 2} chain vertices")
    return fragment
