"""
End-to-end tests: request file to plan, saved plan to rendering.
"""

import random

import pytest

from src.cli.app import render
from src.core.graph_state import graphs_equal
from src.planners.execution import execute_plan, extracted_graph, is_isolated, verify_plan
from src.planners.families import bell_request
from src.planners.planner_factory import PlannerFactory
from src.planners.request import ExtractionRequest
from src.primitives.plan import Plan


@pytest.fixture(params=["lvde", "ovde"])
def planned(request):
    """A Bell request and its plan for each local strategy."""
    extraction = bell_request(7, request.param)
    return extraction, PlannerFactory.create(request.param).plan(extraction)


def test_saved_plan_renders_identically(planned):
    """Test that a reloaded plan renders byte for byte the same."""
    _, plan = planned
    again = Plan.from_json(plan.to_json())
    for fmt in ("json", "ascii", "svg"):
        assert render(again, fmt) == render(plan, fmt)


def test_saved_plan_still_extracts(planned):
    """Test executing a reloaded plan with random outcomes."""
    request, plan = planned
    again = Plan.from_json(plan.to_json())
    graph, frame = execute_plan(again, random_outcomes=True, rng=random.Random(5))
    assert graphs_equal(extracted_graph(again, graph), request.target_graph())
    assert is_isolated(again, graph)
    assert verify_plan(again, "tableau", rng=random.Random(5)).passed


def test_request_file_to_plan(tmp_path):
    """Test the request JSON path used by the command line."""
    path = tmp_path / "req.json"
    path.write_text(bell_request(5, "ovde").to_json(), encoding="utf-8")
    request = ExtractionRequest.from_json(path.read_text(encoding="utf-8"))
    plan = PlannerFactory.create(request.strategy).plan(request)
    assert plan.stats.n_e == 1
    assert plan.stats.total == len(plan.steps)
    assert plan.stats.n_prep == 0
