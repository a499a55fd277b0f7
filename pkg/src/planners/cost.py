"""
Measurement cost accounting for plans.
"""

from typing import List

import pandas as pd

from src.lattice.grid import manhattan
from src.primitives.plan import CostReport, Plan


def edge_lengths(plan: Plan) -> List[int]:
    """Lattice distance of every requested edge."""
    return [manhattan(plan.targets[a], plan.targets[b]) for a, b in plan.edges]


def cost_report(plan: Plan) -> CostReport:
    """
    Count measurements per basis and per phase, plus the request scales.

    N is the grid side length; an edge is long-range when its lattice
    distance exceeds N / 2, and N_c is the largest short-range distance.

    Args:
        plan: Plan to account

    Returns:
        CostReport
    """
    counts = {"X": 0, "Y": 0, "Z": 0}
    n_prep = 0
    for step in plan.steps:
        counts[step.basis] += 1
        if step.phase == "prep":
            n_prep += 1

    scale = max(plan.grid.width, plan.grid.height)
    lengths = edge_lengths(plan)
    short = [d for d in lengths if d <= scale / 2]
    total = sum(counts.values())

    return CostReport(
        n_x=counts["X"],
        n_y=counts["Y"],
        n_z=counts["Z"],
        total=total,
        n_prep=n_prep,
        n_connect=total - n_prep,
        n_e=len(plan.edges),
        n_l=len(lengths) - len(short),
        N=scale,
        N_c=max(short, default=0),
        n_exp=int(plan.metadata.get("n_exp", 0)),
    )


def cost_table(plans: List[Plan]) -> pd.DataFrame:
    """One row per plan, columns as in CostReport plus the strategy."""
    rows = []
    for plan in plans:
        row = {"strategy": plan.strategy}
        row.update(cost_report(plan).to_dict())
        rows.append(row)
    return pd.DataFrame(rows)
