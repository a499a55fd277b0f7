"""
Replay measurement sequences on the oracles and compare them with the
graph rules.

Steps are expressed in the frame of the tracked graph: measuring basis P
on vertex v means measuring C_v P C_v^dagger in the laboratory, where C_v
is the frame's Clifford at v.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from src.core.clifford import CorrectionFrame
from src.core.measurement import LC, local_complement_with_frame, measure_in_place
from src.oracle.pauli_string import PauliString, graph_generator
from src.oracle.statevector import (
    DEFAULT_MAX_QUBITS,
    apply_frame,
    drop_qubit,
    equal_up_to_global_phase,
    project_pauli,
    statevector_of,
)
from src.oracle.tableau import stabilizes_all, tableau_measure, tableau_of

logger = logging.getLogger(__name__)

# (vertex, basis) or (vertex, basis, X-rule neighbor)
Step = Tuple[int, ...]


@dataclass
class VerificationResult:
    """Outcome of an oracle replay."""

    passed: bool
    oracle: str
    graph: nx.Graph
    frame: CorrectionFrame
    outcomes: List[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def lab_pauli_string(frame: CorrectionFrame, pauli: PauliString) -> PauliString:
    """Conjugate a graph-frame Pauli string through the frame."""
    sign = pauli.sign
    ops = {}
    for vertex, label in pauli.ops.items():
        image = frame.lab_pauli(vertex, label)
        sign *= image.sign
        ops[vertex] = image.label
    return PauliString(ops, sign)


def _unpack(step: Step) -> Tuple[int, str, Optional[int]]:
    vertex, basis, *rest = step
    return vertex, basis, (rest[0] if rest else None)


def _draw_outcome(g: nx.Graph, vertex: int, basis: str, rng: Optional[random.Random]) -> int:
    if rng is None or (basis == "X" and g.degree(vertex) == 0):
        return 1
    return rng.choice((1, -1))


def verify_measurement(
    g: nx.Graph,
    frame: CorrectionFrame,
    vertex: int,
    basis: str,
    outcome: int,
    b0: Optional[int] = None,
    tol: float = 1e-9,
) -> bool:
    """
    Check one graph rule against the statevector.

    Projects the frame-corrected state of g and compares the result with the
    post-measurement graph under the updated frame.
    """
    sv = apply_frame(statevector_of(g), frame)
    lab = frame.lab_pauli(vertex, basis)
    index = sv.index_of(vertex)
    projected, _ = project_pauli(sv, index, lab, outcome)
    reduced = drop_qubit(projected, index, lab, outcome)

    post = g.copy()
    updates, _ = measure_in_place(post, vertex, basis, outcome, b0)
    post_frame = frame.without(vertex).apply_at(updates)
    expected = apply_frame(statevector_of(post), post_frame)
    return equal_up_to_global_phase(reduced, expected, tol)


def replay_statevector(
    g: nx.Graph,
    steps: Sequence[Step],
    rng: Optional[random.Random] = None,
    max_qubits: int = DEFAULT_MAX_QUBITS,
    tol: float = 1e-9,
) -> VerificationResult:
    """
    Measure every step on the dense state and on the graph in lock-step.

    Args:
        g: Initial graph (identity frame)
        steps: (vertex, basis[, b0]) in the tracked graph's frame; basis LC
            rewrites the graph by local complementation instead
        rng: Outcome source; all outcomes are +1 when omitted
        max_qubits: Statevector cap
        tol: Fidelity tolerance

    Returns:
        VerificationResult with the final graph and frame
    """
    sv = statevector_of(g, max_qubits)
    current = g.copy()
    frame = CorrectionFrame.identity()
    outcomes = []

    for step in steps:
        vertex, basis, b0 = _unpack(step)
        if basis == LC:
            current, frame = local_complement_with_frame(current, frame, vertex)
            continue
        outcome = _draw_outcome(current, vertex, basis, rng)
        lab = frame.lab_pauli(vertex, basis)
        index = sv.index_of(vertex)
        sv, _ = project_pauli(sv, index, lab, outcome)
        sv = drop_qubit(sv, index, lab, outcome)

        updates, _ = measure_in_place(current, vertex, basis, outcome, b0)
        frame = frame.without(vertex).apply_at(updates)
        outcomes.append(outcome)

    expected = apply_frame(statevector_of(current, max_qubits), frame)
    passed = equal_up_to_global_phase(sv, expected, tol)
    if not passed:
        logger.warning(f"Statevector replay mismatch after {len(steps)} steps")
    return VerificationResult(passed, "statevector", current, frame, outcomes)


def replay_tableau(
    g: nx.Graph,
    steps: Sequence[Step],
    rng: Optional[random.Random] = None,
) -> VerificationResult:
    """
    Tableau counterpart of replay_statevector; scales to full lattices.

    The final check asserts that every frame-conjugated generator of the
    tracked graph stabilizes the measured tableau.
    """
    tableau = tableau_of(g)
    current = g.copy()
    frame = CorrectionFrame.identity()
    outcomes = []

    for step in steps:
        vertex, basis, b0 = _unpack(step)
        if basis == LC:
            current, frame = local_complement_with_frame(current, frame, vertex)
            continue
        outcome = _draw_outcome(current, vertex, basis, rng)
        lab = frame.lab_pauli(vertex, basis)
        tableau = tableau_measure(tableau, vertex, lab.label, lab.sign * outcome)

        updates, _ = measure_in_place(current, vertex, basis, outcome, b0)
        frame = frame.without(vertex).apply_at(updates)
        outcomes.append(outcome)

    generators = (lab_pauli_string(frame, graph_generator(current, a)) for a in current.nodes())
    passed = stabilizes_all(tableau, generators)
    if not passed:
        logger.warning(f"Tableau replay mismatch after {len(steps)} steps")
    return VerificationResult(passed, "tableau", current, frame, outcomes)
