"""
Text and SVG renderings of measurement patterns.
"""

import io
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from src.lattice.grid import Coord  # noqa: E402
from src.lattice.pattern import CellRole, GridPattern  # noqa: E402
from src.primitives.plan import Plan  # noqa: E402

ROLE_COLORS = {
    CellRole.FREE: "#ffffff",
    CellRole.TARGET: "#6aaa64",
    CellRole.MEAS_X: "#f4a6c6",
    CellRole.MEAS_Y: "#b9a7e0",
    CellRole.MEAS_Z: "#f5d76e",
    CellRole.JUNCTION: "#7b4fb8",
}
EDGE_COLOR = "#2e7d32"


def render_ascii(pattern: GridPattern) -> str:
    """One row per lattice row, using . T X Y Z J."""
    return pattern.to_ascii()


def render_svg(pattern: GridPattern, plan: Optional[Plan] = None) -> str:
    """
    Draw the pattern as an SVG document.

    Targets are green, X cells pink, Z cells yellow, Y cells lilac and
    merge junctions purple. With a plan, its requested edges are drawn
    between the targets.

    Args:
        pattern: Pattern to draw
        plan: Plan whose targets and edges are annotated

    Returns:
        SVG text, identical for identical input
    """
    width, height = pattern.spec.width, pattern.spec.height
    with plt.rc_context({"svg.hashsalt": "graph-extract", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(max(2.0, width * 0.3), max(2.0, height * 0.3)))
        for y in range(height):
            for x in range(width):
                role = pattern.role(Coord(x, y))
                ax.add_patch(
                    Rectangle(
                        (x - 0.5, y - 0.5),
                        1,
                        1,
                        facecolor=ROLE_COLORS[role],
                        edgecolor="#cccccc",
                        linewidth=0.5,
                    )
                )

        if plan is not None:
            for a, b in plan.edges:
                ca, cb = plan.targets[a], plan.targets[b]
                ax.plot([ca.x, cb.x], [ca.y, cb.y], color=EDGE_COLOR, linewidth=1.5)
            for label, c in plan.targets.items():
                ax.text(c.x, c.y, label, ha="center", va="center", fontsize=7, color="white")

        ax.set_xlim(-0.5, width - 0.5)
        ax.set_ylim(height - 0.5, -0.5)
        ax.set_aspect("equal")
        ax.axis("off")

        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", bbox_inches="tight", metadata={"Date": None})
        plt.close(fig)
    return buffer.getvalue()
