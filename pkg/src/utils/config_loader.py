"""
Configuration loader utility.
"""

import yaml
import os
from typing import Dict, Any


class ConfigLoader:
    """Load and manage configuration."""

    def __init__(self, config_path: str = "config.yaml"):
        """
        Initialize config loader.

        Args:
            config_path: Path to configuration file
        """
        self.config_path = config_path
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        if not os.path.exists(self.config_path):
            return self._get_default_config()

        with open(self.config_path, "r") as f:
            return yaml.safe_load(f) or self._get_default_config()

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration."""
        return {
            "oracle": {"statevector_max_qubits": 22},
            "planners": {
                "lvde": {
                    "reserve_ports": 2,
                    "expansion": "unidirectional",
                    "straight_penalty": 3,
                    "split_ports": True,
                },
                "ovde": {"reserve_ports": 2, "expansion": "unidirectional", "straight_penalty": 3},
                "cg": {"region_margin": 1},
            },
            "cli": {
                "default_format": "json",
                "default_verify": "graph",
                "output_env_var": "GRAPH_EXTRACT_OUT",
            },
            "logging": {
                "level": "WARNING",
                "file": None,
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            },
        }

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value.

        Args:
            key: Configuration key (supports dot notation)
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split(".")
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def get_planner_config(self, strategy: str) -> Dict[str, Any]:
        """Get configuration for a specific planner."""
        return self.get(f"planners.{strategy}", {}) or {}
