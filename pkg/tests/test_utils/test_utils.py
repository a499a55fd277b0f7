"""
Tests for configuration, logging and scaling metrics.
"""

import logging

import pytest

from src.utils.config_loader import ConfigLoader
from src.utils.logger import setup_logger, verbosity_level
from src.utils.metrics import ScalingMetrics


@pytest.fixture
def metrics():
    """Metrics with exact linear costs for two strategies."""
    m = ScalingMetrics()
    for n in (4, 8, 12, 16):
        m.add_sample("lvde", n, 6 * n + 10, family="bell")
        m.add_sample("ovde", n, 2 * n + 4, family="bell")
    return m


def test_default_config(tmp_path):
    """Test defaults when the config file is missing."""
    config = ConfigLoader(str(tmp_path / "missing.yaml"))
    assert config.get("oracle.statevector_max_qubits") == 22
    assert config.get_planner_config("lvde")["reserve_ports"] == 2
    assert config.get_planner_config("ovde") == {}
    assert config.get("cli.nothing", "fallback") == "fallback"


def test_config_file(tmp_path):
    """Test reading a YAML config."""
    path = tmp_path / "config.yaml"
    path.write_text("planners:\n  cg:\n    region_margin: 3\n", encoding="utf-8")
    config = ConfigLoader(str(path))
    assert config.get_planner_config("cg") == {"region_margin": 3}
    assert config.get_planner_config("lvde") == {}


def test_setup_logger(tmp_path):
    """Test console and file handlers."""
    log_file = tmp_path / "logs" / "run.log"
    logger = setup_logger("test_graph_extract", str(log_file), logging.DEBUG)
    logger.debug("planned")
    for handler in logger.handlers:
        handler.flush()
    assert len(logger.handlers) == 2
    assert "planned" in log_file.read_text(encoding="utf-8")


def test_verbosity_level():
    """Test -v counts."""
    assert verbosity_level(0) == logging.WARNING
    assert verbosity_level(1) == logging.INFO
    assert verbosity_level(3) == logging.DEBUG


def test_linear_fit(metrics):
    """Test slope and intercept of exact linear samples."""
    fit = metrics.fit("lvde", family="bell")
    assert fit["slope"] == pytest.approx(6.0)
    assert fit["intercept"] == pytest.approx(10.0)
    assert fit["r_squared"] == pytest.approx(1.0)
    assert fit["n"] == 4


def test_fit_needs_two_scales():
    """Test that a single scale cannot be fitted."""
    m = ScalingMetrics()
    m.add_sample("cg", 8, 100)
    m.add_sample("cg", 8, 110)
    with pytest.raises(ValueError):
        m.fit("cg")


def test_dominance(metrics):
    """Test the pairwise cost comparison."""
    assert metrics.dominance("ovde", "lvde", family="bell")
    assert not metrics.dominance("lvde", "ovde", family="bell")


def test_summary_and_reset(metrics):
    """Test per-strategy summary."""
    summary = metrics.get_summary()
    assert summary["ovde"]["samples"] == 4
    assert summary["ovde"]["mean_cost"] == pytest.approx(24.0)
    metrics.reset()
    assert metrics.get_summary() == {}
