"""
Shared fixtures.
"""

import random
from typing import Iterator

import networkx as nx
import pytest

from src.lattice.grid import Coord, GridSpec
from src.primitives.builder import PlanBuilder


def random_graphs(seed: int, count: int, min_n: int = 3, max_n: int = 9, p: float = 0.5) -> Iterator[nx.Graph]:
    """Seeded G(n, p) graphs on vertices 0..n-1."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        yield nx.gnp_random_graph(n, p, seed=rng.randrange(2**31))


@pytest.fixture
def rng():
    """Seeded random source."""
    return random.Random(1234)


@pytest.fixture
def small_grid():
    """4x4 lattice, small enough for the statevector oracle."""
    return GridSpec(4, 4)


@pytest.fixture
def grid20():
    """20x20 lattice."""
    return GridSpec(20, 20)


@pytest.fixture
def make_builder():
    """Build a PlanBuilder from a grid size and labelled target cells."""

    def _make(width: int, height: int, **targets):
        coords = {label: Coord(*xy) for label, xy in targets.items()}
        return PlanBuilder(GridSpec(width, height), coords)

    return _make
