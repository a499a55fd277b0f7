"""
Binary symplectic stabilizer tableau.

Each generator row stores its X part and Z part as Python integer bitsets
(bit i belongs to the i-th smallest vertex id) plus a sign bit. Only the
stabilizer rows are kept; measurements with deterministic outcomes are
resolved by elimination, which is quadratic per query but fast enough for
full lattice verification.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from src.core.errors import DomainError, ImpossibleOutcomeError
from src.oracle.pauli_string import PauliString

logger = logging.getLogger(__name__)

Row = Tuple[int, int, int]  # (x bits, z bits, sign bit)

_LABEL_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


def _anticommutes(r: Row, s: Row) -> bool:
    return ((r[0] & s[1]).bit_count() + (r[1] & s[0]).bit_count()) % 2 == 1


def _multiply(r: Row, s: Row) -> Row:
    """Row product r * s for commuting rows."""
    x1, z1, s1 = r
    x2, z2, s2 = s
    only_x1, both1, only_z1 = x1 & ~z1, x1 & z1, z1 & ~x1
    only_x2, both2, only_z2 = x2 & ~z2, x2 & z2, z2 & ~x2
    phase = (
        (both1 & only_z2).bit_count()
        - (both1 & only_x2).bit_count()
        + (only_x1 & both2).bit_count()
        - (only_x1 & only_z2).bit_count()
        + (only_z1 & only_x2).bit_count()
        - (only_z1 & both2).bit_count()
    )
    total = (2 * s1 + 2 * s2 + phase) % 4
    if total % 2:
        raise DomainError("Product of anticommuting rows is not Hermitian")
    return x1 ^ x2, z1 ^ z2, total // 2


@dataclass(frozen=True)
class Tableau:
    """Stabilizer generators of a pure state on labelled qubits."""

    qubits: Tuple[int, ...]
    rows: Tuple[Row, ...]

    @property
    def n_qubits(self) -> int:
        return len(self.qubits)

    def _position(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.qubits)}

    def row_of(self, pauli: PauliString) -> Row:
        position = self._position()
        x = z = 0
        for vertex, label in pauli.ops.items():
            if vertex not in position:
                raise DomainError(f"Vertex {vertex} is not a qubit of this tableau")
            bx, bz = _LABEL_BITS[label]
            x |= bx << position[vertex]
            z |= bz << position[vertex]
        return x, z, 0 if pauli.sign == 1 else 1

    def pauli_of(self, row: Row) -> PauliString:
        ops = {}
        for i, vertex in enumerate(self.qubits):
            bits = ((row[0] >> i) & 1, (row[1] >> i) & 1)
            for label, label_bits in _LABEL_BITS.items():
                if bits == label_bits:
                    ops[vertex] = label
        return PauliString(ops, -1 if row[2] else 1)

    def generators(self) -> List[PauliString]:
        return [self.pauli_of(row) for row in self.rows]


def tableau_of(g: nx.Graph) -> Tableau:
    """Generators K_a = X_a times Z on each neighbor of a."""
    qubits = tuple(sorted(g.nodes()))
    position = {v: i for i, v in enumerate(qubits)}
    rows = []
    for a in qubits:
        z = 0
        for b in g.adj[a]:
            z |= 1 << position[b]
        rows.append((1 << position[a], z, 0))
    return Tableau(qubits, tuple(rows))


def _key(row: Row, n_bits: int) -> int:
    return row[0] | (row[1] << n_bits)


def reduced_basis(t: Tableau) -> List[Tuple[int, Row]]:
    """Echelon form of the generators, each row paired with its pivot bit."""
    n_bits = t.n_qubits
    basis: List[Tuple[int, Row]] = []
    for row in t.rows:
        for pivot, base in basis:
            if (_key(row, n_bits) >> pivot) & 1:
                row = _multiply(row, base)
        if _key(row, n_bits):
            basis.append((_key(row, n_bits).bit_length() - 1, row))
    return basis


def _in_group(t: Tableau, basis: List[Tuple[int, Row]], row: Row) -> bool:
    if any(_anticommutes(row, r) for r in t.rows):
        return False
    for pivot, base in basis:
        if (_key(row, t.n_qubits) >> pivot) & 1:
            row = _multiply(row, base)
    return row == (0, 0, 0)


def stabilizes(t: Tableau, p: PauliString) -> bool:
    """True iff p (with its sign) belongs to the stabilizer group of t."""
    return _in_group(t, reduced_basis(t), t.row_of(p))


def stabilizes_all(t: Tableau, paulis: Iterable[PauliString]) -> bool:
    """Membership test for many strings sharing one elimination pass."""
    basis = reduced_basis(t)
    return all(_in_group(t, basis, t.row_of(p)) for p in paulis)


def tableau_measure(t: Tableau, qubit: int, basis: str, outcome: int) -> Tableau:
    """
    Project qubit (a vertex id) onto the outcome eigenspace of a Pauli.

    The measured qubit stays in the tableau as a product factor.

    Raises:
        ImpossibleOutcomeError: If the outcome is deterministic and differs
    """
    if basis not in _LABEL_BITS:
        raise DomainError(f"Unknown basis {basis!r}")
    if outcome not in (1, -1):
        raise DomainError(f"Outcome must be +1 or -1, got {outcome}")
    measured = t.row_of(PauliString({qubit: basis}, outcome))

    clashing = [i for i, r in enumerate(t.rows) if _anticommutes(r, measured)]
    if not clashing:
        if stabilizes(t, PauliString({qubit: basis}, outcome)):
            return t
        raise ImpossibleOutcomeError(
            f"{basis} on vertex {qubit} is deterministic with outcome {-outcome:+d}"
        )

    pivot = t.rows[clashing[0]]
    rows = list(t.rows)
    for i in clashing[1:]:
        rows[i] = _multiply(rows[i], pivot)
    rows[clashing[0]] = measured
    return Tableau(t.qubits, tuple(rows))
