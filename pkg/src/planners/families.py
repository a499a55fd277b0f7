"""
Parameterized request families for cost comparisons.
"""

import random
from typing import Dict, List

from src.lattice.grid import Coord, GridSpec, manhattan
from src.planners.request import ExtractionRequest


def bell_request(distance: int, strategy: str = "lvde", margin: int = 3) -> ExtractionRequest:
    """Two targets on one row, `distance` sites apart."""
    side = distance + 2 * margin + 1
    y = side // 2
    targets = {"a": Coord(margin, y), "b": Coord(margin + distance, y)}
    return ExtractionRequest(GridSpec(side, side), targets, [("a", "b")], strategy)


def clustered_ghz_request(
    k: int,
    seed: int,
    strategy: str = "ovde",
    side: int = 20,
    n_c: int = 3,
    spacing: int = 3,
    max_tries: int = 10_000,
) -> ExtractionRequest:
    """
    Star request: a hub on the left, k leaves clustered on the right.

    Leaves are drawn from the square of radius n_c around the cluster
    center and kept at least `spacing` apart.

    Raises:
        ValueError: If k leaves do not fit the cluster
    """
    rng = random.Random(seed)
    hub = Coord(side // 5, side // 2)
    center = Coord(side - side // 4, side // 2)

    leaves: List[Coord] = []
    for _ in range(max_tries):
        if len(leaves) == k:
            break
        c = Coord(center.x + rng.randint(-n_c, n_c), center.y + rng.randint(-n_c, n_c))
        if all(manhattan(c, other) >= spacing for other in leaves):
            leaves.append(c)
    if len(leaves) < k:
        raise ValueError(f"Cannot place {k} leaves {spacing} apart within radius {n_c}")

    targets: Dict[str, Coord] = {"h": hub}
    for i, c in enumerate(leaves):
        targets[f"l{i}"] = c
    edges = [("h", f"l{i}") for i in range(k)]
    return ExtractionRequest(GridSpec(side, side), targets, edges, strategy)
