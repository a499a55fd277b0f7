"""
Tests for the vertex-degree expansion gadgets.
"""

import pytest

from src.core.errors import DomainError, SpaceError
from src.lattice.grid import Coord
from src.primitives.expansion import (
    expand_degree,
    expand_degree_u_shaped,
    u_shaped_ops,
    unidirectional_ops,
)


@pytest.mark.parametrize("n_exp", [1, 2, 3, 4, 5])
def test_unidirectional_counts(make_builder, n_exp):
    """Test 4 steps and +2 degree per application."""
    builder = make_builder(16, 9, a=(2, 4))
    v = builder.target_vertex("a")
    before = builder.graph.degree(v)

    fragment = expand_degree(builder, Coord(2, 4), "right", n_exp)

    assert len(fragment) == 4 * n_exp
    assert fragment.count("Y") == 2 * n_exp
    assert fragment.count("Z") == 2 * n_exp
    assert builder.graph.degree(v) == before + 2 * n_exp
    assert builder.n_exp == n_exp
    for stub in fragment.info["stubs"]:
        assert builder.graph.has_edge(v, builder.vid(stub))


@pytest.mark.parametrize("n_exp", [1, 2, 3])
def test_u_shaped_counts(make_builder, n_exp):
    """Test 12 n + 8 steps and +2n degree."""
    builder = make_builder(20, 14, a=(10, 10))
    v = builder.target_vertex("a")
    before = builder.graph.degree(v)

    fragment = expand_degree_u_shaped(builder, Coord(10, 10), n_exp)

    assert len(fragment) == 12 * n_exp + 8
    assert builder.graph.degree(v) == before + 2 * n_exp
    assert all(stub.y < 10 for stub in fragment.info["stubs"])


def test_op_lists_match_counts():
    """Test the pure op generators."""
    ops, stubs = unidirectional_ops(Coord(0, 5), "right", 3)
    assert len(ops) == 12
    assert len(stubs) == 7
    ops, stubs = u_shaped_ops(Coord(10, 10), 2)
    assert len(ops) == 32
    assert len(stubs) == 6


def test_expansion_off_grid(make_builder):
    """Test SpaceError at the lattice border, leaving the builder untouched."""
    builder = make_builder(8, 8, a=(1, 1))
    with pytest.raises(SpaceError) as info:
        expand_degree(builder, Coord(1, 1), "left")
    assert info.value.element is not None
    assert builder.steps == []


def test_expansion_blocked_by_target(make_builder):
    """Test that a target inside the footprint blocks the gadget."""
    builder = make_builder(12, 8, a=(2, 4), b=(4, 4))
    with pytest.raises(SpaceError):
        expand_degree(builder, Coord(2, 4), "right")
    assert builder.steps == []


def test_expansion_bad_arguments(make_builder):
    """Test unknown direction and non-positive n_exp."""
    builder = make_builder(12, 8, a=(2, 4))
    with pytest.raises(DomainError):
        expand_degree(builder, Coord(2, 4), "sideways")
    with pytest.raises(DomainError):
        expand_degree(builder, Coord(2, 4), "right", 0)
