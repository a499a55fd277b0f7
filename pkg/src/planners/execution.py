"""
Plan execution and oracle verification.
"""

import logging
import random
from typing import Optional, Tuple

import networkx as nx

from src.core.clifford import CorrectionFrame
from src.core.errors import ConsistencyError, DomainError
from src.core.graph_state import canonical_edges, graphs_equal
from src.core.measurement import execute_sequence
from src.lattice.grid import cluster_graph
from src.oracle.statevector import DEFAULT_MAX_QUBITS
from src.oracle.verification import VerificationResult, replay_statevector, replay_tableau
from src.primitives.plan import Plan

logger = logging.getLogger(__name__)

ORACLES = ("statevector", "tableau")


def execute_plan(
    plan: Plan, random_outcomes: bool = False, rng: Optional[random.Random] = None
) -> Tuple[nx.Graph, CorrectionFrame]:
    """
    Run the plan's measurements on the full cluster state.

    Args:
        plan: Plan to execute
        random_outcomes: Draw outcomes instead of assuming +1
        rng: Outcome source

    Returns:
        Tuple of (graph on the unmeasured vertices, correction frame)

    Raises:
        ConsistencyError: If the result differs from the predicted graph
    """
    graph, frame = execute_sequence(cluster_graph(plan.grid), plan.step_pairs(), random_outcomes, rng)
    if not graphs_equal(graph, plan.predicted_graph):
        missing = set(canonical_edges(plan.predicted_graph)) - set(canonical_edges(graph))
        extra = set(canonical_edges(graph)) - set(canonical_edges(plan.predicted_graph))
        raise ConsistencyError(
            f"Executed graph differs from prediction: {len(missing)} missing, {len(extra)} extra edges"
        )
    logger.debug(f"Executed {len(plan.steps)} steps, {graph.number_of_nodes()} vertices remain")
    return graph, frame


def extracted_graph(plan: Plan, graph: nx.Graph) -> nx.Graph:
    """Subgraph on the targets, relabelled with the target labels."""
    ids = plan.target_vertices()
    labels = {v: label for label, v in ids.items()}
    return nx.relabel_nodes(graph.subgraph(ids.values()), labels, copy=True)


def is_isolated(plan: Plan, graph: nx.Graph) -> bool:
    """True when no target has a neighbor outside the target set."""
    ids = set(plan.target_vertices().values())
    return all(set(graph.adj[v]) <= ids for v in ids)


def verify_plan(
    plan: Plan,
    oracle: str = "tableau",
    rng: Optional[random.Random] = None,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> VerificationResult:
    """
    Replay the plan on an oracle and compare with the predicted graph.

    Raises:
        DomainError: Unknown oracle name
        ResourceError: Statevector requested above the qubit cap
    """
    start = cluster_graph(plan.grid)
    if oracle == "statevector":
        result = replay_statevector(start, plan.step_pairs(), rng, max_qubits)
    elif oracle == "tableau":
        result = replay_tableau(start, plan.step_pairs(), rng)
    else:
        raise DomainError(f"Unknown oracle {oracle!r}; choose from {ORACLES}")

    if not graphs_equal(result.graph, plan.predicted_graph):
        result.passed = False
    logger.info(f"{oracle} verification {'passed' if result.passed else 'FAILED'}")
    return result
