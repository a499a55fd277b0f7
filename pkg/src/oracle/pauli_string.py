"""
Signed multi-qubit Pauli strings keyed by vertex id.
"""

from dataclasses import dataclass, field
from typing import Dict, Mapping

import networkx as nx

from src.core.errors import DomainError


@dataclass(frozen=True)
class PauliString:
    """sign * tensor product of ops[v] over vertices; absent vertices carry I."""

    ops: Mapping[int, str] = field(default_factory=dict)
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"Sign must be +1 or -1, got {self.sign}")
        cleaned: Dict[int, str] = {}
        for vertex, label in self.ops.items():
            if label not in ("I", "X", "Y", "Z"):
                raise DomainError(f"Unknown Pauli label {label!r}")
            if label != "I":
                cleaned[int(vertex)] = label
        object.__setattr__(self, "ops", dict(sorted(cleaned.items())))

    @classmethod
    def parse(cls, text: str) -> "PauliString":
        """Parse strings such as ``"-X0 Z3 Y4"``."""
        text = text.strip()
        sign = 1
        if text[:1] in "+-":
            sign = -1 if text[0] == "-" else 1
            text = text[1:]
        ops = {}
        for token in text.split():
            try:
                ops[int(token[1:])] = token[0]
            except (ValueError, IndexError) as exc:
                raise DomainError(f"Bad Pauli token {token!r}") from exc
        return cls(ops, sign)

    def __str__(self) -> str:
        body = " ".join(f"{label}{v}" for v, label in self.ops.items()) or "I"
        return ("+" if self.sign > 0 else "-") + body


def graph_generator(g: nx.Graph, a: int) -> PauliString:
    """Stabilizer generator X_a times Z on every neighbor of a."""
    ops = {b: "Z" for b in g.adj[a]}
    ops[a] = "X"
    return PauliString(ops)
