"""
Tests for the plan builder's bookkeeping.
"""

import pytest

from src.core.errors import DomainError
from src.lattice.grid import Coord
from src.lattice.pattern import CellRole
from src.primitives.plan import PlanStep


def test_measure_rejects_target_cell_without_side_effects(make_builder):
    """Test that a target cell is refused before the graph changes."""
    builder = make_builder(6, 6, a=(2, 2), b=(4, 4))
    va = builder.target_vertex("a")
    builder.protected.discard(va)
    edges_before = set(builder.graph.edges())

    with pytest.raises(DomainError):
        builder.measure(va, "Z")

    assert va in builder.graph
    assert set(builder.graph.edges()) == edges_before
    assert builder.steps == []


def test_measure_rejects_b0_outside_x(make_builder):
    """Test that a neighbor choice is refused for Y and Z."""
    builder = make_builder(6, 6, a=(2, 2))
    v = builder.vid(Coord(3, 3))
    with pytest.raises(DomainError):
        builder.measure(v, "Y", b0=builder.vid(Coord(3, 2)))
    assert v in builder.graph


def test_measure_records_b0(make_builder):
    """Test that the X-rule neighbor is stored with the step."""
    builder = make_builder(6, 6, a=(0, 0))
    builder.measure(builder.vid(Coord(3, 3)), "X", "test", b0=builder.vid(Coord(3, 4)))
    step = builder.steps[-1]
    assert step.b0 == Coord(3, 4)
    assert builder.pattern.role(Coord(3, 3)) is CellRole.MEAS_X


def test_release_frees_target(make_builder):
    """Test that a released target can be measured and drops its label."""
    builder = make_builder(6, 6, a=(2, 2), b=(4, 4))
    va = builder.target_vertex("a")

    builder.release(va)
    builder.measure(va, "Z")

    assert "a" not in builder.targets
    assert va not in builder.graph
    assert builder.pattern.role(Coord(2, 2)) is CellRole.MEAS_Z


def test_rollback_restores_targets(make_builder):
    """Test that a checkpoint brings back released targets."""
    builder = make_builder(6, 6, a=(2, 2), b=(4, 4))
    cp = builder.checkpoint()
    builder.release(builder.target_vertex("a"))
    builder.rollback(cp)
    assert builder.targets["a"] == Coord(2, 2)
    assert builder.target_vertex("a") in builder.protected


def test_plan_step_keeps_b0_in_json():
    """Test that the X-rule neighbor survives the step's JSON form."""
    step = PlanStep(Coord(1, 2), "X", 0, "zipper-path", "connect", Coord(1, 3))
    data = step.to_dict()
    assert data["b0"] == [1, 3]
    assert PlanStep.from_dict(data) == step
    assert "b0" not in PlanStep(Coord(1, 2), "Z", 1).to_dict()
