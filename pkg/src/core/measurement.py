"""
Pauli measurement rules on graph states.

Measuring vertex a of |G> in a Pauli basis leaves the other qubits in
U |G'> where G' follows from G by a graph rewrite and U is a product of
local Cliffords that depends on the outcome:

    Z:  G' = G - a
    Y:  G' = tau_a(G) - a
    X:  G' = tau_b0(tau_a(tau_b0(G)) - a)   for a chosen neighbor b0

Measured vertices are removed from the graph. The returned frame holds U.
"""

import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

import networkx as nx

from src.core.clifford import (
    PAULI_Z,
    SQRT_MINUS_IX,
    SQRT_MINUS_IY,
    SQRT_MINUS_IZ,
    SQRT_PLUS_IY,
    SQRT_PLUS_IZ,
    CorrectionFrame,
    LocalClifford,
)
from src.core.errors import DomainError, ImpossibleOutcomeError
from src.core.graph_state import local_complement_in_place, require_vertex

logger = logging.getLogger(__name__)

BASES = ("X", "Y", "Z")

# Pseudo-basis for a local complementation applied as a frame rewrite
LC = "LC"


@dataclass(frozen=True)
class MeasurementRecord:
    """One applied Pauli measurement."""

    vertex: int
    basis: str
    outcome: int
    chosen_neighbor: Optional[int] = None


def _check_outcome(outcome: int) -> None:
    if outcome not in (1, -1):
        raise DomainError(f"Outcome must be +1 or -1, got {outcome}")


def _z_product(vertices: Iterable[int]) -> Dict[int, LocalClifford]:
    return {v: PAULI_Z for v in vertices}


def measure_in_place(
    g: nx.Graph, a: int, basis: str, outcome: int = 1, b0: Optional[int] = None
) -> Tuple[Dict[int, LocalClifford], Optional[int]]:
    """
    Apply a measurement rule to g, mutating it.

    Args:
        g: Graph to rewrite
        a: Measured vertex
        basis: "X", "Y" or "Z"
        outcome: +1 or -1
        b0: Neighbor used by the X rule (smallest neighbor if omitted)

    Returns:
        Tuple of (byproduct Clifford per vertex, chosen X neighbor or None)

    Raises:
        DomainError: Unknown vertex, bad basis, or b0 not adjacent to a
        ImpossibleOutcomeError: X outcome -1 on an isolated vertex
    """
    require_vertex(g, a)
    _check_outcome(outcome)
    neighbors = set(g.adj[a])

    if basis == "Z":
        g.remove_node(a)
        return (_z_product(neighbors) if outcome == -1 else {}), None

    if basis == "Y":
        local_complement_in_place(g, a)
        g.remove_node(a)
        byproduct = SQRT_MINUS_IZ if outcome == 1 else SQRT_PLUS_IZ
        return {v: byproduct for v in neighbors}, None

    if basis != "X":
        raise DomainError(f"Unknown basis {basis!r}")

    if b0 is not None and b0 not in neighbors:
        raise DomainError(f"Vertex {b0} is not adjacent to {a}")
    if not neighbors:
        if outcome == -1:
            raise ImpossibleOutcomeError(f"X outcome -1 on isolated vertex {a}")
        g.remove_node(a)
        return {}, None

    if b0 is None:
        b0 = min(neighbors)
    b0_neighbors = set(g.adj[b0])

    local_complement_in_place(g, b0)
    local_complement_in_place(g, a)
    g.remove_node(a)
    local_complement_in_place(g, b0)

    if outcome == 1:
        updates = _z_product(neighbors - b0_neighbors - {b0})
        updates[b0] = SQRT_PLUS_IY
    else:
        updates = _z_product(b0_neighbors - neighbors - {a})
        updates[b0] = SQRT_MINUS_IY
    return updates, b0


def _measure(g: nx.Graph, a: int, basis: str, outcome: int, b0: Optional[int] = None):
    result = g.copy()
    updates, chosen = measure_in_place(result, a, basis, outcome, b0)
    record = MeasurementRecord(vertex=a, basis=basis, outcome=outcome, chosen_neighbor=chosen)
    return result, CorrectionFrame(updates), record


def measure_z(g: nx.Graph, a: int, outcome: int = 1) -> Tuple[nx.Graph, CorrectionFrame, MeasurementRecord]:
    """Z measurement: delete a and its edges."""
    return _measure(g, a, "Z", outcome)


def measure_y(g: nx.Graph, a: int, outcome: int = 1) -> Tuple[nx.Graph, CorrectionFrame, MeasurementRecord]:
    """Y measurement: complement N(a), then delete a."""
    return _measure(g, a, "Y", outcome)


def measure_x(
    g: nx.Graph, a: int, outcome: int = 1, b0: Optional[int] = None
) -> Tuple[nx.Graph, CorrectionFrame, MeasurementRecord]:
    """X measurement via the neighbor b0 (defaults to the smallest neighbor)."""
    return _measure(g, a, "X", outcome, b0)


def measure(
    g: nx.Graph, a: int, basis: str, outcome: int = 1, b0: Optional[int] = None
) -> Tuple[nx.Graph, CorrectionFrame, MeasurementRecord]:
    """Dispatch on basis."""
    if basis not in BASES:
        raise DomainError(f"Unknown basis {basis!r}")
    return _measure(g, a, basis, outcome, b0)


def execute_sequence(
    g: nx.Graph,
    steps: Sequence[Tuple[Any, ...]],
    random_outcomes: bool = False,
    rng: Optional[random.Random] = None,
) -> Tuple[nx.Graph, CorrectionFrame]:
    """
    Apply measurements in order.

    Args:
        g: Initial graph
        steps: (vertex, basis) or (vertex, basis, b0) with distinct vertices;
            b0 None means the default X neighbor
        random_outcomes: Draw each outcome uniformly instead of using +1
        rng: Random source used when random_outcomes is set

    Returns:
        Tuple of (final graph, accumulated frame on the remaining vertices)

    Raises:
        DomainError: Duplicate or unknown step vertex
    """
    parsed = [(step[0], step[1], step[2] if len(step) > 2 else None) for step in steps]
    seen = set()
    for vertex, basis, _ in parsed:
        if vertex in seen:
            raise DomainError(f"Vertex {vertex} measured twice")
        seen.add(vertex)
        require_vertex(g, vertex)
        if basis not in BASES:
            raise DomainError(f"Unknown basis {basis!r}")

    rng = rng or random.Random(0)
    current = g.copy()
    frame = CorrectionFrame.identity()

    for vertex, basis, b0 in parsed:
        outcome = 1
        # X on an isolated vertex is deterministic
        if random_outcomes and not (basis == "X" and current.degree(vertex) == 0):
            outcome = rng.choice((1, -1))
        updates, _ = measure_in_place(current, vertex, basis, outcome, b0)
        frame = frame.without(vertex).apply_at(updates)

    logger.debug(f"Executed {len(steps)} measurements, {current.number_of_nodes()} vertices remain")
    return current, frame


def local_complement_with_frame(
    g: nx.Graph, frame: CorrectionFrame, a: int
) -> Tuple[nx.Graph, CorrectionFrame]:
    """
    Rewrite the graph by local complementation at a without changing the state.

    |tau_a(G)> = U |G> with U = sqrt(-iX_a) times sqrt(iZ_b) over b in N(a),
    so the frame absorbs U^dagger.
    """
    require_vertex(g, a)
    updates = {b: SQRT_PLUS_IZ.inverse() for b in g.adj[a]}
    updates[a] = SQRT_MINUS_IX.inverse()
    result = g.copy()
    local_complement_in_place(result, a)
    return result, frame.apply_at(updates)
