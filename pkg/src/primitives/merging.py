"""
Merging two subgraphs across a degree-2 bridge vertex.
"""

import logging

import networkx as nx

from src.core.errors import MergePreconditionError
from src.core.graph_state import require_vertex
from src.core.measurement import measure_in_place
from src.primitives.builder import PlanBuilder
from src.primitives.plan import JUNCTION_TAG, Fragment

logger = logging.getLogger(__name__)


def check_merge(g: nx.Graph, y1: int, y3: int, y2: int) -> None:
    """
    Validate the merge layout G1 - y1 - y3 - y2 - G2.

    Raises:
        MergePreconditionError: Naming the missing or offending edge
    """
    for v in (y1, y3, y2):
        require_vertex(g, v)
    for a, b in ((y1, y3), (y3, y2)):
        if not g.has_edge(a, b):
            raise MergePreconditionError(f"Missing edge {a}-{b}", edge=(a, b))
    if g.degree(y3) != 2:
        extra = min(set(g.adj[y3]) - {y1, y2})
        raise MergePreconditionError(
            f"Bridge {y3} must have degree 2, also touches {extra}", edge=(y3, extra)
        )
    if g.has_edge(y1, y2):
        raise MergePreconditionError(f"Edge {y1}-{y2} joins the two sides", edge=(y1, y2))
    for p in sorted(set(g.adj[y1]) - {y3}):
        if g.has_edge(p, y2):
            raise MergePreconditionError(
                f"Edge {p}-{y2} joins N({y1}) to the merge vertex", edge=(p, y2)
            )


def merge_subgraphs(g: nx.Graph, y1: int, y3: int, y2: int) -> nx.Graph:
    """
    Merge the subgraph at y1 into y2 by Y-measuring y1, then y3.

    y2 inherits N(y1) without y3; every other edge is preserved.

    Args:
        g: Graph containing the path y1 - y3 - y2
        y1: Vertex whose neighborhood moves
        y3: Degree-2 bridge
        y2: Vertex that receives the neighborhood

    Returns:
        New graph without y1 and y3

    Raises:
        MergePreconditionError: If the layout is not mergeable
    """
    check_merge(g, y1, y3, y2)
    result = g.copy()
    measure_in_place(result, y1, "Y")
    measure_in_place(result, y3, "Y")
    return result


def merge_at(builder: PlanBuilder, y1: int, y3: int, y2: int) -> Fragment:
    """Plan-level merge: y1 is recorded as the merge junction."""
    check_merge(builder.graph, y1, y3, y2)
    with builder.recording("merge", y1=y1, y3=y3, y2=y2) as fragment:
        builder.measure(y1, "Y", JUNCTION_TAG)
        builder.measure(y3, "Y", "merge-bridge")
    logger.debug(f"Merged {y1} into {y2} across {y3}")
    return fragment
