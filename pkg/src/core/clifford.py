"""
Single-qubit Clifford group and the per-vertex correction frame.

A local Clifford is identified by how it conjugates X and Z. The 24 group
elements are generated once from H and S; composition goes through their
2x2 matrices and is re-keyed by the conjugation images.
"""

from collections import deque
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple

import numpy as np

PAULI_MATRICES: Dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_PHASE = np.array([[1, 0], [0, 1j]], dtype=complex)


class SignedPauli(NamedTuple):
    """A single-qubit Pauli operator with a sign of +1 or -1."""

    sign: int
    label: str

    def matrix(self) -> np.ndarray:
        return self.sign * PAULI_MATRICES[self.label]

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.label


def _signed_pauli_of(matrix: np.ndarray) -> SignedPauli:
    """Identify a Hermitian matrix that equals +-P for a Pauli P."""
    for label in ("X", "Y", "Z"):
        overlap = np.trace(PAULI_MATRICES[label] @ matrix) / 2
        if abs(abs(overlap) - 1) < 1e-9:
            return SignedPauli(1 if overlap.real > 0 else -1, label)
    raise ValueError("Matrix is not a signed non-identity Pauli")


def _images(matrix: np.ndarray) -> Tuple[SignedPauli, SignedPauli]:
    dagger = matrix.conj().T
    return (
        _signed_pauli_of(matrix @ PAULI_MATRICES["X"] @ dagger),
        _signed_pauli_of(matrix @ PAULI_MATRICES["Z"] @ dagger),
    )


def _generate_group() -> Dict[Tuple[SignedPauli, SignedPauli], np.ndarray]:
    identity = np.eye(2, dtype=complex)
    table = {_images(identity): identity}
    queue = deque([identity])

    while queue:
        current = queue.popleft()
        for generator in (_HADAMARD, _PHASE):
            candidate = generator @ current
            key = _images(candidate)
            if key not in table:
                table[key] = candidate
                queue.append(candidate)

    return table


_GROUP = _generate_group()


class LocalClifford:
    """An element of the single-qubit Clifford group (modulo global phase)."""

    __slots__ = ("x_image", "z_image")

    def __init__(self, x_image: SignedPauli, z_image: SignedPauli):
        if (x_image, z_image) not in _GROUP:
            raise ValueError(f"Not a Clifford: X->{x_image}, Z->{z_image}")
        self.x_image = x_image
        self.z_image = z_image

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "LocalClifford":
        x_image, z_image = _images(np.asarray(matrix, dtype=complex))
        return cls(x_image, z_image)

    @classmethod
    def identity(cls) -> "LocalClifford":
        return cls(SignedPauli(1, "X"), SignedPauli(1, "Z"))

    @classmethod
    def pauli(cls, label: str) -> "LocalClifford":
        return cls.from_matrix(PAULI_MATRICES[label])

    @classmethod
    def all_elements(cls) -> Iterator["LocalClifford"]:
        for x_image, z_image in _GROUP:
            yield cls(x_image, z_image)

    @property
    def matrix(self) -> np.ndarray:
        """Canonical unitary representative."""
        return _GROUP[(self.x_image, self.z_image)]

    def is_identity(self) -> bool:
        return self.x_image == SignedPauli(1, "X") and self.z_image == SignedPauli(1, "Z")

    def compose(self, other: "LocalClifford") -> "LocalClifford":
        """Return the product self @ other (other acts first on a state)."""
        return LocalClifford.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> "LocalClifford":
        return LocalClifford.from_matrix(self.matrix.conj().T)

    def conjugate(self, label: str) -> SignedPauli:
        """Return C P C^dagger for the Pauli named by label."""
        if label == "X":
            return self.x_image
        if label == "Z":
            return self.z_image
        dagger = self.matrix.conj().T
        return _signed_pauli_of(self.matrix @ PAULI_MATRICES[label] @ dagger)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalClifford):
            return NotImplemented
        return (self.x_image, self.z_image) == (other.x_image, other.z_image)

    def __hash__(self) -> int:
        return hash((self.x_image, self.z_image))

    def __repr__(self) -> str:
        return f"LocalClifford(X->{self.x_image}, Z->{self.z_image})"


# Byproducts of the graph-state Pauli measurement rules
SQRT_MINUS_IZ = LocalClifford.from_matrix(_PHASE)
SQRT_PLUS_IZ = LocalClifford.from_matrix(_PHASE.conj().T)
SQRT_PLUS_IY = LocalClifford.from_matrix(np.array([[1, 1], [-1, 1]]) / np.sqrt(2))
SQRT_MINUS_IY = LocalClifford.from_matrix(np.array([[1, -1], [1, 1]]) / np.sqrt(2))
SQRT_MINUS_IX = LocalClifford.from_matrix(np.array([[1, -1j], [-1j, 1]]) / np.sqrt(2))
PAULI_Z = LocalClifford.pauli("Z")


class CorrectionFrame:
    """
    Per-vertex local Clifford corrections.

    The represented state is the tensor product of the frame's Cliffords
    applied to the graph state it accompanies. Vertices without an entry
    carry the identity. Instances are treated as immutable values.
    """

    def __init__(self, cliffords: Optional[Mapping[int, LocalClifford]] = None):
        self._cliffords: Dict[int, LocalClifford] = {
            v: c for v, c in (cliffords or {}).items() if not c.is_identity()
        }

    @classmethod
    def identity(cls) -> "CorrectionFrame":
        return cls()

    def get(self, vertex: int) -> LocalClifford:
        return self._cliffords.get(vertex, LocalClifford.identity())

    def vertices(self) -> Iterable[int]:
        return sorted(self._cliffords)

    def is_identity(self) -> bool:
        return not self._cliffords

    def apply_at(self, updates: Mapping[int, LocalClifford]) -> "CorrectionFrame":
        """Right-multiply the Clifford of each listed vertex by its update."""
        merged = dict(self._cliffords)
        for vertex, update in updates.items():
            merged[vertex] = self.get(vertex).compose(update)
        return CorrectionFrame(merged)

    def compose(self, other: "CorrectionFrame") -> "CorrectionFrame":
        """Frame whose per-vertex Clifford is self[v] @ other[v]."""
        return self.apply_at({v: other.get(v) for v in other.vertices()})

    def inverse(self) -> "CorrectionFrame":
        return CorrectionFrame({v: c.inverse() for v, c in self._cliffords.items()})

    def without(self, vertex: int) -> "CorrectionFrame":
        remaining = dict(self._cliffords)
        remaining.pop(vertex, None)
        return CorrectionFrame(remaining)

    def restrict(self, vertices: Iterable[int]) -> "CorrectionFrame":
        keep = set(vertices)
        return CorrectionFrame({v: c for v, c in self._cliffords.items() if v in keep})

    def lab_pauli(self, vertex: int, basis: str) -> SignedPauli:
        """Physical observable equivalent to measuring basis in the graph frame."""
        return self.get(vertex).conjugate(basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CorrectionFrame):
            return NotImplemented
        return self._cliffords == other._cliffords

    def __len__(self) -> int:
        return len(self._cliffords)

    def __repr__(self) -> str:
        return f"CorrectionFrame({len(self._cliffords)} non-trivial)"
