"""
Dense statevector oracle.

Qubits are ordered by sorted vertex id; qubit 0 is the most significant
bit of a basis-state index.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import networkx as nx
import numpy as np

from src.core.clifford import PAULI_MATRICES, CorrectionFrame, SignedPauli
from src.core.errors import DomainError, ImpossibleOutcomeError, ResourceError
from src.oracle.pauli_string import PauliString

logger = logging.getLogger(__name__)

DEFAULT_MAX_QUBITS = 22
PROBABILITY_FLOOR = 1e-12


@dataclass(frozen=True)
class StateVector:
    """Unit-norm amplitudes over labelled qubits."""

    qubits: Tuple[int, ...]
    amplitudes: np.ndarray

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    def index_of(self, vertex: int) -> int:
        try:
            return self.qubits.index(vertex)
        except ValueError as exc:
            raise DomainError(f"Vertex {vertex} is not a qubit of this state") from exc

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def statevector_of(g: nx.Graph, max_qubits: int = DEFAULT_MAX_QUBITS) -> StateVector:
    """
    Product of CZ over the edges of g applied to |+>^n.

    Args:
        g: Graph
        max_qubits: Resource cap

    Returns:
        Graph state

    Raises:
        ResourceError: If g has more vertices than max_qubits
    """
    qubits = tuple(sorted(g.nodes()))
    n = len(qubits)
    if n > max_qubits:
        raise ResourceError(f"{n} qubits exceed the statevector cap of {max_qubits}")

    position = {v: i for i, v in enumerate(qubits)}
    basis = np.arange(2**n, dtype=np.int64)
    parity = np.zeros(2**n, dtype=np.int64)
    for a, b in g.edges():
        bit_a = (basis >> (n - 1 - position[a])) & 1
        bit_b = (basis >> (n - 1 - position[b])) & 1
        parity ^= bit_a & bit_b

    amplitudes = np.where(parity == 1, -1.0, 1.0).astype(complex) / np.sqrt(2**n)
    return StateVector(qubits, amplitudes)


def apply_single(sv: StateVector, qubit: int, matrix: np.ndarray) -> StateVector:
    """Apply a 2x2 matrix on qubit index ``qubit``."""
    if not 0 <= qubit < sv.n_qubits:
        raise DomainError(f"Qubit index {qubit} out of range")
    psi = sv.amplitudes.reshape(2**qubit, 2, -1)
    out = np.einsum("ab,ibj->iaj", matrix, psi)
    return StateVector(sv.qubits, out.reshape(-1))


def apply_frame(sv: StateVector, frame: CorrectionFrame) -> StateVector:
    """Apply each frame Clifford to its vertex's qubit."""
    for vertex in frame.vertices():
        if vertex in sv.qubits:
            sv = apply_single(sv, sv.index_of(vertex), frame.get(vertex).matrix)
    return sv


def apply_pauli_string(sv: StateVector, pauli: PauliString) -> StateVector:
    for vertex, label in pauli.ops.items():
        sv = apply_single(sv, sv.index_of(vertex), PAULI_MATRICES[label])
    return StateVector(sv.qubits, pauli.sign * sv.amplitudes)


def expectation(sv: StateVector, pauli: PauliString) -> float:
    return float(np.vdot(sv.amplitudes, apply_pauli_string(sv, pauli).amplitudes).real)


def is_stabilized_by(sv: StateVector, pauli: PauliString, tol: float = 1e-9) -> bool:
    """True iff pauli |sv> = |sv>."""
    return expectation(sv, pauli) >= 1 - tol


def project_pauli(
    sv: StateVector,
    qubit: int,
    pauli: SignedPauli,
    outcome: int,
    floor: float = PROBABILITY_FLOOR,
) -> Tuple[StateVector, float]:
    """Project qubit onto the outcome eigenspace of a signed Pauli and renormalize."""
    if not 0 <= qubit < sv.n_qubits:
        raise DomainError(f"Qubit index {qubit} out of range")
    if outcome not in (1, -1):
        raise DomainError(f"Outcome must be +1 or -1, got {outcome}")
    projector = (np.eye(2) + outcome * pauli.matrix()) / 2
    projected = apply_single(sv, qubit, projector).amplitudes
    probability = float(np.vdot(projected, projected).real)
    if probability < floor:
        raise ImpossibleOutcomeError(
            f"Outcome {outcome:+d} of {pauli} on qubit {qubit} has probability {probability:.3g}"
        )
    return StateVector(sv.qubits, projected / np.sqrt(probability)), probability


def project_measure(
    sv: StateVector, qubit: int, basis: str, outcome: int, floor: float = PROBABILITY_FLOOR
) -> Tuple[StateVector, float]:
    """
    Apply (I + outcome * P) / 2 on a qubit and renormalize.

    Args:
        sv: State
        qubit: Qubit index
        basis: "X", "Y" or "Z"
        outcome: +1 or -1
        floor: Smallest probability treated as possible

    Returns:
        Tuple of (post-measurement state, outcome probability)

    Raises:
        ImpossibleOutcomeError: If the outcome probability is below floor
    """
    if basis not in ("X", "Y", "Z"):
        raise DomainError(f"Unknown basis {basis!r}")
    return project_pauli(sv, qubit, SignedPauli(1, basis), outcome, floor)


def drop_qubit(sv: StateVector, qubit: int, pauli: SignedPauli, outcome: int) -> StateVector:
    """
    Remove a qubit that is in an eigenstate of ``pauli``.

    The qubit is contracted against the eigenvector with eigenvalue outcome.
    """
    eigenvalues, eigenvectors = np.linalg.eigh(pauli.matrix())
    vector = eigenvectors[:, int(np.argmin(np.abs(eigenvalues - outcome)))]
    psi = sv.amplitudes.reshape(2**qubit, 2, -1)
    rest = np.einsum("a,iaj->ij", vector.conj(), psi).reshape(-1)
    qubits = sv.qubits[:qubit] + sv.qubits[qubit + 1:]
    return StateVector(qubits, rest / np.linalg.norm(rest))


def equal_up_to_global_phase(a: StateVector, b: StateVector, tol: float = 1e-9) -> bool:
    """True iff |<a|b>| >= 1 - tol."""
    if a.n_qubits != b.n_qubits:
        raise DomainError(f"Qubit counts differ: {a.n_qubits} vs {b.n_qubits}")
    return abs(np.vdot(a.amplitudes, b.amplitudes)) >= 1 - tol


def schmidt_rank(sv: StateVector, part: Sequence[int], tol: float = 1e-9) -> int:
    """log2 of the number of non-zero Schmidt coefficients across (part, rest)."""
    side = [sv.index_of(v) for v in part]
    rest = [i for i in range(sv.n_qubits) if i not in side]
    tensor = sv.amplitudes.reshape([2] * sv.n_qubits)
    matrix = np.transpose(tensor, side + rest).reshape(2 ** len(side), -1)
    singular = np.linalg.svd(matrix, compute_uv=False)
    count = int(np.sum(singular > tol))
    return int(round(np.log2(count)))

