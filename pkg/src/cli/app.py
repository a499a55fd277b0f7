"""
Command-line front end: plan a request, render it, verify it, report costs.
"""

import argparse
import logging
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from src.cli.render import render_ascii, render_svg
from src.core.errors import ConsistencyError, GraphExtractionError, RequestParseError
from src.core.graph_state import graphs_equal
from src.planners.cost import cost_table
from src.planners.execution import execute_plan, extracted_graph, is_isolated, verify_plan
from src.planners.planner_factory import PlannerFactory
from src.planners.request import STRATEGIES, ExtractionRequest
from src.primitives.plan import Plan
from src.utils.config_loader import ConfigLoader
from src.utils.logger import setup_logger, verbosity_level

logger = logging.getLogger(__name__)

FORMATS = ("json", "ascii", "svg")
VERIFY_MODES = ("off", "graph", "statevector", "tableau")
SUFFIXES = {"json": ".plan.json", "ascii": ".txt", "svg": ".svg"}

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PLANNING = 3
EXIT_VERIFY = 4


@dataclass
class CliConfig:
    """Resolved command-line options."""

    input: str
    strategy: Optional[str] = None
    format: str = "json"
    verify: str = "graph"
    seed: int = 0
    out: Optional[str] = None
    verbose: int = 0
    config_path: str = "config.yaml"


def build_parser(config: ConfigLoader) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graph-extract",
        description="Plan Pauli measurements that extract a graph state from a 2D cluster state.",
    )
    parser.add_argument("--input", required=True, help="Request JSON file")
    parser.add_argument("--strategy", choices=STRATEGIES, help="Override the request's strategy")
    parser.add_argument("--format", choices=FORMATS, default=config.get("cli.default_format", "json"))
    parser.add_argument("--verify", choices=VERIFY_MODES, default=config.get("cli.default_verify", "graph"))
    parser.add_argument("--seed", type=int, default=0, help="Seed for measurement outcomes")
    parser.add_argument("--out", help="Output directory (default: $GRAPH_EXTRACT_OUT or stdout)")
    parser.add_argument("--config", dest="config_path", default="config.yaml")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def render(plan: Plan, fmt: str) -> str:
    if fmt == "ascii":
        return render_ascii(plan.pattern())
    if fmt == "svg":
        return render_svg(plan.pattern(), plan)
    return plan.to_json() + "\n"


def verify(plan: Plan, request: ExtractionRequest, mode: str, seed: int, max_qubits: int) -> bool:
    """
    Re-execute the plan and, for oracle modes, replay it on a simulator.

    Raises:
        ConsistencyError: If execution disagrees with the prediction
    """
    if mode == "off":
        return True

    rng = random.Random(seed)
    graph, _ = execute_plan(plan, random_outcomes=True, rng=rng)
    if not graphs_equal(extracted_graph(plan, graph), request.target_graph()):
        logger.error("Extracted graph differs from the requested graph")
        return False
    if not is_isolated(plan, graph):
        logger.error("Targets are still entangled with the rest of the lattice")
        return False
    if mode == "graph":
        return True

    oracle = mode
    if oracle == "statevector" and plan.grid.size > max_qubits:
        print(
            f"notice: {plan.grid.size} qubits exceed the statevector cap of {max_qubits}; "
            "verifying with the tableau oracle",
            file=sys.stderr,
        )
        oracle = "tableau"
    return verify_plan(plan, oracle=oracle, rng=random.Random(seed), max_qubits=max_qubits).passed


def write_outputs(plan: Plan, cfg: CliConfig, stem: str) -> None:
    text = render(plan, cfg.format)
    if cfg.out is None:
        sys.stdout.write(text)
        return

    out_dir = Path(cfg.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / f"{stem}.plan.json").write_text(plan.to_json() + "\n", encoding="utf-8")
    if cfg.format != "json":
        (out_dir / f"{stem}{SUFFIXES[cfg.format]}").write_text(text, encoding="utf-8")
    logger.info(f"Wrote outputs for {stem} to {out_dir}")


def run(cfg: CliConfig) -> int:
    """
    Plan, write and verify one request.

    Returns:
        Exit status: 0 success, 2 parse error, 3 planning failure,
        4 verification mismatch
    """
    config = ConfigLoader(cfg.config_path)
    try:
        text = Path(cfg.input).read_text(encoding="utf-8")
        request = ExtractionRequest.from_json(text)
    except OSError as exc:
        print(f"error: cannot read {cfg.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RequestParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if cfg.strategy:
        request = request.with_strategy(cfg.strategy)

    planner = PlannerFactory.create(request.strategy, config.get_planner_config(request.strategy))
    try:
        plan = planner.plan(request)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except GraphExtractionError as exc:
        element = getattr(exc, "element", None)
        suffix = f" (at {element})" if element is not None else ""
        print(f"error: planning failed: {exc}{suffix}", file=sys.stderr)
        return EXIT_PLANNING

    write_outputs(plan, cfg, Path(cfg.input).stem)
    print(cost_table([plan]).to_string(index=False), file=sys.stderr)

    max_qubits = int(config.get("oracle.statevector_max_qubits", 22))
    try:
        passed = verify(plan, request, cfg.verify, cfg.seed, max_qubits)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if not passed:
        print(f"error: {cfg.verify} verification failed", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    bootstrap = ConfigLoader()
    args = build_parser(bootstrap).parse_args(argv)
    config = ConfigLoader(args.config_path)

    env_var = config.get("cli.output_env_var", "GRAPH_EXTRACT_OUT")
    cfg = CliConfig(
        input=args.input,
        strategy=args.strategy,
        format=args.format,
        verify=args.verify,
        seed=args.seed,
        out=args.out or os.environ.get(env_var) or None,
        verbose=args.verbose,
        config_path=args.config_path,
    )

    level = verbosity_level(cfg.verbose) if cfg.verbose else getattr(
        logging, str(config.get("logging.level", "WARNING")).upper(), logging.WARNING
    )
    setup_logger(
        "src",
        config.get("logging.file"),
        level,
        config.get("logging.format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
