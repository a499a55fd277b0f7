"""
Scaling metrics for measurement costs.
"""

from typing import Dict, List, Optional

import pandas as pd
from scipy import stats


class ScalingMetrics:
    """Track (scale, cost) samples per strategy and fit linear growth."""

    def __init__(self):
        """Initialize metrics tracker."""
        self.samples: List[Dict] = []

    def add_sample(self, strategy: str, scale: float, cost: float, family: str = ""):
        """
        Add a measurement-cost sample.

        Args:
            strategy: Planner that produced the cost
            scale: Scale parameter of the instance (distance or grid side)
            cost: Measurement count
            family: Name of the request family
        """
        self.samples.append(
            {"strategy": strategy, "family": family, "scale": float(scale), "cost": float(cost)}
        )

    def to_frame(self) -> pd.DataFrame:
        """All samples as a DataFrame."""
        return pd.DataFrame(self.samples, columns=["strategy", "family", "scale", "cost"])

    def fit(self, strategy: str, family: Optional[str] = None) -> Dict[str, float]:
        """
        Least-squares line of cost against scale.

        Args:
            strategy: Strategy to fit
            family: Restrict to one family

        Returns:
            Dict with slope, intercept, r_squared and n

        Raises:
            ValueError: If fewer than two distinct scales were sampled
        """
        frame = self.to_frame()
        frame = frame[frame["strategy"] == strategy]
        if family is not None:
            frame = frame[frame["family"] == family]
        if frame["scale"].nunique() < 2:
            raise ValueError(f"Need at least two distinct scales to fit {strategy}")

        result = stats.linregress(frame["scale"], frame["cost"])
        return {
            "slope": float(result.slope),
            "intercept": float(result.intercept),
            "r_squared": float(result.rvalue**2),
            "n": int(len(frame)),
        }

    def dominance(self, better: str, worse: str, family: Optional[str] = None) -> bool:
        """True when `better` never costs more than `worse`; samples pair up in insertion order."""
        frame = self.to_frame()
        if family is not None:
            frame = frame[frame["family"] == family]
        a = frame[frame["strategy"] == better].reset_index(drop=True)
        b = frame[frame["strategy"] == worse].reset_index(drop=True)
        return bool((a["cost"] <= b["cost"]).all())

    def get_summary(self) -> Dict:
        """Get summary statistics per strategy."""
        frame = self.to_frame()
        if frame.empty:
            return {}
        grouped = frame.groupby("strategy")["cost"]
        return {
            strategy: {"samples": int(count), "mean_cost": float(mean)}
            for strategy, count, mean in zip(
                grouped.count().index, grouped.count().values, grouped.mean().values
            )
        }

    def reset(self):
        """Reset all samples."""
        self.samples = []
