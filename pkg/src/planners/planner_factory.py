"""
Factory for creating planner instances.
"""

from typing import Dict, Type

from src.planners.base_planner import BasePlanner
from src.planners.cg_planner import CGPlanner
from src.planners.lvde_planner import LVDEPlanner
from src.planners.ovde_planner import OVDEPlanner


class PlannerFactory:
    """Factory for creating planner instances."""

    _planners: Dict[str, Type[BasePlanner]] = {
        "lvde": LVDEPlanner,
        "ovde": OVDEPlanner,
        "cg": CGPlanner,
    }

    @classmethod
    def create(cls, strategy: str, config: dict = None) -> BasePlanner:
        """
        Create a planner instance.

        Args:
            strategy: Strategy name
            config: Planner configuration block

        Returns:
            Planner instance

        Raises:
            ValueError: If the strategy is unknown
        """
        if strategy not in cls._planners:
            raise ValueError(
                f"Unknown strategy: {strategy}. "
                f"Available: {list(cls._planners.keys())}"
            )

        planner_class = cls._planners[strategy]
        return planner_class(config)

    @classmethod
    def get_available_planners(cls) -> list:
        """Get list of available strategies."""
        return list(cls._planners.keys())

    @classmethod
    def get_planner_info(cls) -> Dict[str, str]:
        """Get information about each planner."""
        return {
            "lvde": "Local vertex-degree expansion - Expansion gadgets per vertex, one zipper per edge",
            "ovde": "Optimized vertex-degree expansion - Junction trees collecting each vertex's star",
            "cg": "Central generation - CZ/SWAP schedule in a free region, then transport",
        }
