"""
Graph-state graphs: construction, local complementation and canonical JSON.

Graphs are plain ``networkx.Graph`` objects with integer vertex ids. Every
public function here returns a new graph and leaves its input untouched.
"""

import json
from itertools import combinations
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Tuple

import networkx as nx
import numpy as np

from src.core.errors import DomainError


def make_graph(vertices: Iterable[int], edges: Iterable[Tuple[int, int]] = ()) -> nx.Graph:
    """
    Build a simple graph, rejecting self-loops and unknown endpoints.

    Args:
        vertices: Vertex ids
        edges: Vertex pairs

    Returns:
        New graph
    """
    g = nx.Graph()
    g.add_nodes_from(int(v) for v in vertices)
    for a, b in edges:
        a, b = int(a), int(b)
        if a == b:
            raise DomainError(f"Self-loop on vertex {a}")
        if a not in g or b not in g:
            raise DomainError(f"Edge ({a}, {b}) references an unknown vertex")
        g.add_edge(a, b)
    return g


def star_graph(center: int, leaves: Iterable[int]) -> nx.Graph:
    leaves = list(leaves)
    return make_graph([center, *leaves], [(center, leaf) for leaf in leaves])


def require_vertex(g: nx.Graph, a: int) -> None:
    if a not in g:
        raise DomainError(f"Unknown vertex {a}")


def neighborhood(g: nx.Graph, a: int) -> FrozenSet[int]:
    """Return the neighborhood of a."""
    require_vertex(g, a)
    return frozenset(g.adj[a])


def flip_edge(g: nx.Graph, a: int, b: int) -> None:
    """Add or remove the edge a-b in place."""
    if g.has_edge(a, b):
        g.remove_edge(a, b)
    else:
        g.add_edge(a, b)


def local_complement_in_place(g: nx.Graph, a: int) -> None:
    """Toggle every edge inside the neighborhood of a, mutating g."""
    for b, c in combinations(sorted(g.adj[a]), 2):
        flip_edge(g, b, c)


def local_complement(g: nx.Graph, a: int) -> nx.Graph:
    """
    Local complementation at vertex a.

    Args:
        g: Input graph
        a: Vertex whose neighborhood is complemented

    Returns:
        New graph with the edges inside N(a) toggled

    Raises:
        DomainError: If a is not a vertex of g
    """
    require_vertex(g, a)
    result = g.copy()
    local_complement_in_place(result, a)
    return result


def _plain(v: Hashable) -> Hashable:
    return int(v) if isinstance(v, (int, np.integer)) else v


def _node_key(v: Hashable) -> Tuple[int, Any]:
    # integer ids numerically, other labels by their text
    v = _plain(v)
    return (0, v) if isinstance(v, int) else (1, str(v))


def canonical_edges(g: nx.Graph) -> List[Tuple[Hashable, Hashable]]:
    """Edges with the smaller endpoint first, in sorted order; any node labels."""
    edges = (tuple(sorted((_plain(a), _plain(b)), key=_node_key)) for a, b in g.edges())
    return sorted(edges, key=lambda e: (_node_key(e[0]), _node_key(e[1])))


def graph_to_dict(g: nx.Graph) -> Dict[str, Any]:
    """Canonical form: sorted vertices, smaller id first, edges sorted."""
    return {
        "vertices": sorted((_plain(v) for v in g.nodes()), key=_node_key),
        "edges": [list(edge) for edge in canonical_edges(g)],
    }


def graph_from_dict(data: Dict[str, Any]) -> nx.Graph:
    try:
        return make_graph(data["vertices"], [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"Malformed graph object: {exc}") from exc


def graph_to_json(g: nx.Graph) -> str:
    return json.dumps(graph_to_dict(g), separators=(",", ":"))


def graph_from_json(text: str) -> nx.Graph:
    return graph_from_dict(json.loads(text))


def graphs_equal(g: nx.Graph, h: nx.Graph) -> bool:
    """Exact equality of vertex and edge sets."""
    if set(g.nodes()) != set(h.nodes()):
        return False
    return {frozenset(e) for e in g.edges()} == {frozenset(e) for e in h.edges()}


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2) of a 0/1 matrix."""
    rows = [int("".join(str(int(bit)) for bit in row), 2) for row in np.asarray(matrix) if len(row)]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
    return rank


def schmidt_rank(g: nx.Graph, part: Iterable[int]) -> int:
    """
    Schmidt rank (log2) of the graph state across the cut (part, rest).

    Equals the GF(2) rank of the adjacency block between the two sides.

    Args:
        g: Graph
        part: One side of the bipartition

    Returns:
        Number of ebits across the cut
    """
    side = sorted(set(part))
    for v in side:
        require_vertex(g, v)
    rest = sorted(set(g.nodes()) - set(side))
    if not side or not rest:
        return 0
    block = nx.to_numpy_array(g, nodelist=side + rest, dtype=int)[: len(side), len(side):]
    return gf2_rank(block)
