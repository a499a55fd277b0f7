"""
Script to compare measurement costs of the planners on request families.

Writes one CSV row per (family, instance, strategy) and prints the fitted
slopes of the distance family and the clustered-GHZ dominance check.
"""

import argparse
import logging
import os
import sys

import pandas as pd
from tqdm import tqdm

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from src.core.errors import GraphExtractionError  # noqa: E402
from src.planners.families import bell_request, clustered_ghz_request  # noqa: E402
from src.planners.planner_factory import PlannerFactory  # noqa: E402
from src.utils.config_loader import ConfigLoader  # noqa: E402
from src.utils.logger import setup_logger  # noqa: E402
from src.utils.metrics import ScalingMetrics  # noqa: E402

logger = logging.getLogger("src.scripts.scaling")


def run_distance_family(metrics: ScalingMetrics, config: ConfigLoader, distances, strategies):
    rows = []
    jobs = [(n, s) for n in distances for s in strategies]
    for n, strategy in tqdm(jobs, desc="distance family"):
        request = bell_request(n, strategy)
        planner = PlannerFactory.create(strategy, config.get_planner_config(strategy))
        try:
            plan = planner.plan(request)
        except GraphExtractionError as exc:
            logger.warning(f"bell N={n} {strategy}: {exc}")
            rows.append({"family": "bell", "instance": n, "strategy": strategy, "ok": False})
            continue
        metrics.add_sample(strategy, n, plan.stats.n_connect, family="bell")
        rows.append(
            {"family": "bell", "instance": n, "strategy": strategy, "ok": True, **plan.stats.to_dict()}
        )
    return rows


def run_clustered_family(metrics: ScalingMetrics, config: ConfigLoader, ks, seeds):
    rows = []
    jobs = [(k, seed) for k in ks for seed in range(seeds)]
    for k, seed in tqdm(jobs, desc="clustered GHZ"):
        totals = {}
        for strategy in ("lvde", "ovde"):
            request = clustered_ghz_request(k, seed, strategy)
            planner = PlannerFactory.create(strategy, config.get_planner_config(strategy))
            try:
                totals[strategy] = planner.plan(request).stats.total
            except GraphExtractionError as exc:
                logger.warning(f"ghz k={k} seed={seed} {strategy}: {exc}")
        for strategy, total in totals.items():
            rows.append(
                {"family": "ghz", "instance": f"{k}/{seed}", "strategy": strategy, "ok": True, "total": total}
            )
        if len(totals) == 2:
            metrics.add_sample("lvde", k, totals["lvde"], family="ghz")
            metrics.add_sample("ovde", k, totals["ovde"], family="ghz")
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results/scaling.csv")
    parser.add_argument("--seeds", type=int, default=20)
    parser.add_argument("--min-distance", type=int, default=8)
    parser.add_argument("--max-distance", type=int, default=24)
    args = parser.parse_args()

    setup_logger("src", level=logging.WARNING)
    config = ConfigLoader()
    metrics = ScalingMetrics()

    rows = run_distance_family(
        metrics, config, range(args.min_distance, args.max_distance + 1, 2), ("lvde", "ovde", "cg")
    )
    rows += run_clustered_family(metrics, config, range(3, 7), args.seeds)

    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    pd.DataFrame(rows).to_csv(args.out, index=False)
    print(f"Wrote {len(rows)} rows to {args.out}")

    for strategy in ("lvde", "ovde", "cg"):
        try:
            fit = metrics.fit(strategy, family="bell")
        except ValueError as exc:
            print(f"{strategy}: {exc}")
            continue
        print(f"{strategy}: connect cost ~ {fit['slope']:.2f} N + {fit['intercept']:.1f} (R^2 {fit['r_squared']:.3f})")
    print(f"OVDE <= LVDE on every clustered instance: {metrics.dominance('ovde', 'lvde', family='ghz')}")


if __name__ == "__main__":
    main()
