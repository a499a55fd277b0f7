"""
Tests for the command-line front end and its renderings.
"""

import json

import pytest

from src.cli.app import EXIT_OK, EXIT_PARSE, EXIT_PLANNING, CliConfig, main, render, run
from src.cli.render import render_ascii, render_svg
from src.lattice.grid import Coord, GridSpec
from src.lattice.pattern import CellRole, GridPattern
from src.planners.families import bell_request
from src.planners.ovde_planner import OVDEPlanner
from src.planners.request import ExtractionRequest
from src.primitives.plan import Plan


@pytest.fixture
def missing_config(tmp_path):
    """Config path that does not exist, so defaults apply."""
    return str(tmp_path / "no-config.yaml")


@pytest.fixture
def bell_file(tmp_path):
    """Bell request on a 13x13 grid."""
    path = tmp_path / "bell.json"
    path.write_text(bell_request(6, "ovde").to_json(), encoding="utf-8")
    return path


@pytest.fixture
def small_file(tmp_path):
    """Bell request on a 5x4 grid."""
    request = ExtractionRequest(GridSpec(5, 4), {"a": Coord(0, 1), "b": Coord(4, 2)}, [("a", "b")])
    path = tmp_path / "small.json"
    path.write_text(request.to_json(), encoding="utf-8")
    return path


def test_render_ascii_empty():
    """Test the text rendering of an untouched lattice."""
    assert render_ascii(GridPattern(GridSpec(3, 3))) == "...\n...\n...\n"


def test_render_ascii_roles():
    """Test role characters."""
    pattern = GridPattern(GridSpec(3, 2))
    pattern.set(Coord(0, 0), CellRole.TARGET)
    pattern.set(Coord(1, 0), CellRole.MEAS_Y)
    pattern.set(Coord(2, 1), CellRole.JUNCTION)
    assert render_ascii(pattern) == "TY.\n..J\n"


def test_render_svg_is_deterministic():
    """Test that identical plans give identical SVG text."""
    plan = Plan.from_json(_plan_json())
    first = render_svg(plan.pattern(), plan)
    second = render_svg(plan.pattern(), plan)
    assert first == second
    assert first.lstrip().startswith("<?xml")
    assert "#6aaa64" in first


def _plan_json():
    return OVDEPlanner().plan(bell_request(4, "ovde")).to_json()


def test_render_dispatch():
    """Test the three output formats."""
    plan = Plan.from_json(_plan_json())
    assert json.loads(render(plan, "json"))["strategy"] == "ovde"
    assert render(plan, "ascii").count("\n") == plan.grid.height
    assert "<svg" in render(plan, "svg")


def test_run_writes_plan_to_stdout(bell_file, missing_config, capsys):
    """Test a successful run with graph verification."""
    cfg = CliConfig(input=str(bell_file), config_path=missing_config)
    assert run(cfg) == EXIT_OK
    out, err = capsys.readouterr()
    plan = Plan.from_json(out)
    assert plan.strategy == "ovde"
    assert "total" in err


def test_run_strategy_override(bell_file, missing_config, capsys):
    """Test --strategy replacing the request's strategy."""
    cfg = CliConfig(input=str(bell_file), strategy="lvde", verify="off", config_path=missing_config)
    assert run(cfg) == EXIT_OK
    assert Plan.from_json(capsys.readouterr().out).strategy == "lvde"


def test_run_malformed_json(tmp_path, missing_config, capsys):
    """Test exit status 2 on a syntax error."""
    path = tmp_path / "broken.json"
    path.write_text('{"grid": {"width": 4,\n "height": }}', encoding="utf-8")
    assert run(CliConfig(input=str(path), config_path=missing_config)) == EXIT_PARSE
    assert "line 2" in capsys.readouterr().err


def test_run_missing_file(tmp_path, missing_config):
    """Test exit status 2 on an unreadable input."""
    cfg = CliConfig(input=str(tmp_path / "absent.json"), config_path=missing_config)
    assert run(cfg) == EXIT_PARSE


def test_run_planning_failure(tmp_path, missing_config, capsys):
    """Test exit status 3 when the planner gives up."""
    request = ExtractionRequest(GridSpec(8, 8), {"a": Coord(1, 1), "b": Coord(6, 6)}, [("a", "b")], "cg")
    path = tmp_path / "crowded.json"
    path.write_text(request.to_json(), encoding="utf-8")
    assert run(CliConfig(input=str(path), config_path=missing_config)) == EXIT_PLANNING
    assert "planning failed" in capsys.readouterr().err


def test_run_statevector_falls_back(bell_file, missing_config, capsys):
    """Test the notice when the lattice exceeds the statevector cap."""
    cfg = CliConfig(input=str(bell_file), verify="statevector", config_path=missing_config)
    assert run(cfg) == EXIT_OK
    assert "notice" in capsys.readouterr().err


def test_run_statevector_small(small_file, missing_config, capsys):
    """Test statevector verification on a 20-qubit lattice."""
    cfg = CliConfig(input=str(small_file), verify="statevector", config_path=missing_config)
    assert run(cfg) == EXIT_OK
    assert "notice" not in capsys.readouterr().err


def test_run_writes_files(bell_file, tmp_path, missing_config):
    """Test --out with an SVG rendering."""
    out = tmp_path / "out"
    cfg = CliConfig(input=str(bell_file), format="svg", verify="off", out=str(out), config_path=missing_config)
    assert run(cfg) == EXIT_OK
    assert (out / "bell.plan.json").exists()
    assert (out / "bell.svg").read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_main_ascii(bell_file, missing_config, monkeypatch, capsys):
    """Test the argument parser end to end."""
    monkeypatch.delenv("GRAPH_EXTRACT_OUT", raising=False)
    status = main(["--input", str(bell_file), "--format", "ascii", "--config", missing_config])
    assert status == EXIT_OK
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 13
    assert sum(row.count("T") for row in rows) == 2


def test_main_output_from_environment(bell_file, tmp_path, missing_config, monkeypatch):
    """Test the output directory taken from the environment."""
    out = tmp_path / "env-out"
    monkeypatch.setenv("GRAPH_EXTRACT_OUT", str(out))
    assert main(["--input", str(bell_file), "--verify", "off", "--config", missing_config]) == EXIT_OK
    assert (out / "bell.plan.json").exists()
