"""
Exception hierarchy for graph-state extraction.
"""

from typing import Any, Optional, Tuple


class GraphExtractionError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GraphExtractionError, ValueError):
    """Invalid argument: unknown vertex, non-adjacent neighbor, size mismatch."""


class ImpossibleOutcomeError(GraphExtractionError):
    """A forced measurement outcome has zero probability."""


class ResourceError(GraphExtractionError):
    """A simulation would exceed the configured resource cap."""


class RequestParseError(GraphExtractionError):
    """An extraction request or plan file could not be parsed."""


class PlanningError(GraphExtractionError):
    """
    A planner could not realize part of a request.

    Attributes:
        element: The vertex, edge or region the planner failed on
    """

    def __init__(self, message: str, element: Any = None):
        super().__init__(message)
        self.element = element


class NoPathError(PlanningError):
    """No route exists through free cells."""


class SpaceError(PlanningError):
    """A gadget footprint is blocked.

    Attributes:
        blocking: First coordinate of the footprint that is not free
    """

    def __init__(self, message: str, blocking: Optional[Tuple[int, int]] = None):
        super().__init__(message, element=blocking)
        self.blocking = blocking


class DegreeError(PlanningError):
    """A vertex does not have the degree a gadget needs."""


class AdjacencyError(PlanningError):
    """Two vertices are adjacent where a gadget needs them apart."""


class MergePreconditionError(PlanningError):
    """The merging tool's preconditions do not hold.

    Attributes:
        edge: The offending edge as a vertex pair
    """

    def __init__(self, message: str, edge: Optional[Tuple[int, int]] = None):
        super().__init__(message, element=edge)
        self.edge = edge


class ConsistencyError(GraphExtractionError):
    """Executing a plan did not reproduce its predicted graph."""
