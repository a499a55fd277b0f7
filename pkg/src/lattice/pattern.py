"""
Measurement pattern: a role for every lattice site.
"""

import json
from enum import Enum
from typing import Dict, Iterable, List

from src.core.errors import DomainError, RequestParseError
from src.lattice.grid import Coord, GridSpec


class CellRole(Enum):
    """Role of a lattice site, valued by its ASCII character."""

    FREE = "."
    TARGET = "T"
    MEAS_X = "X"
    MEAS_Y = "Y"
    MEAS_Z = "Z"
    JUNCTION = "J"

    @classmethod
    def for_basis(cls, basis: str) -> "CellRole":
        return {"X": cls.MEAS_X, "Y": cls.MEAS_Y, "Z": cls.MEAS_Z}[basis]


class GridPattern:
    """Sparse map from Coord to CellRole; unlisted cells are FREE."""

    def __init__(self, spec: GridSpec, cells: Dict[Coord, CellRole] = None):
        self.spec = spec
        self._cells: Dict[Coord, CellRole] = {}
        for c, role in (cells or {}).items():
            self.set(c, role)

    def role(self, c: Coord) -> CellRole:
        if not self.spec.contains(c):
            raise DomainError(f"{tuple(c)} lies outside the grid")
        return self._cells.get(c, CellRole.FREE)

    def is_free(self, c: Coord) -> bool:
        return self.spec.contains(c) and c not in self._cells

    def set(self, c: Coord, role: CellRole) -> None:
        """
        Assign a role.

        Raises:
            DomainError: If c is off-grid or a TARGET would be overwritten
        """
        current = self.role(c)
        if current is CellRole.TARGET and role is not CellRole.TARGET:
            raise DomainError(f"Target cell {tuple(c)} cannot become {role.name}")
        if role is CellRole.FREE:
            self._cells.pop(c, None)
        else:
            self._cells[c] = role

    def clear(self, c: Coord) -> None:
        """Return c to FREE, targets included."""
        self.role(c)
        self._cells.pop(c, None)

    def mark(self, cells: Iterable[Coord], role: CellRole) -> None:
        for c in cells:
            self.set(c, role)

    def cells_with(self, *roles: CellRole) -> List[Coord]:
        return sorted((c for c, r in self._cells.items() if r in roles), key=lambda c: (c.y, c.x))

    def marked(self) -> List[Coord]:
        return sorted(self._cells, key=lambda c: (c.y, c.x))

    def copy(self) -> "GridPattern":
        return GridPattern(self.spec, dict(self._cells))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridPattern):
            return NotImplemented
        return self.spec == other.spec and self._cells == other._cells

    def to_dict(self) -> dict:
        return {
            "width": self.spec.width,
            "height": self.spec.height,
            "cells": [
                {"x": c.x, "y": c.y, "role": self._cells[c].value} for c in self.marked()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GridPattern":
        try:
            pattern = cls(GridSpec(int(data["width"]), int(data["height"])))
            for cell in data["cells"]:
                pattern.set(Coord(int(cell["x"]), int(cell["y"])), CellRole(cell["role"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise RequestParseError(f"Malformed pattern: {exc}") from exc
        return pattern

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_ascii(self) -> str:
        rows = []
        for y in range(self.spec.height):
            rows.append("".join(self.role(Coord(x, y)).value for x in range(self.spec.width)))
        return "\n".join(rows) + "\n"
