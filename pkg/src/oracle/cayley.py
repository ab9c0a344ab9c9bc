"""
Cayley Ball Oracle
Exact BFS balls in Cayley graphs and an empirical count of ends
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import pandas as pd

from ..errors import BudgetExceeded, InsufficientRadius
from ..invariants.types import EndCount
from .normal_forms import NormalFormGroup, Token

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 2_000_000
DEFAULT_MARGIN = 3


@dataclass(frozen=True)
class BallGraph:
    """
    Elements within distance `radius` of the identity, in BFS order.

    Edges join element indices and carry the generator index; each
    undirected edge is stored once, from the endpoint discovered first.
    """
    radius: int
    elements: Tuple[Token, ...]
    distance: np.ndarray = field(repr=False)
    edges: Tuple[Tuple[int, int, int], ...] = field(repr=False)
    exhausted: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def sphere_sizes(self) -> List[int]:
        return np.bincount(self.distance, minlength=self.radius + 1).tolist()

    def graph(self, min_distance: int = 0) -> nx.MultiGraph:
        """The ball's Cayley graph restricted to elements at distance >= min_distance"""
        keep = np.flatnonzero(self.distance >= min_distance)
        graph = nx.MultiGraph()
        graph.add_nodes_from(keep.tolist())
        graph.add_edges_from((u, v, {"generator": g}) for u, v, g in self.edges
                             if self.distance[u] >= min_distance and self.distance[v] >= min_distance)
        return graph


def ball(group: NormalFormGroup, radius: int, budget: int = DEFAULT_BUDGET) -> BallGraph:
    """
    Enumerate the ball of the given radius layer by layer.

    Args:
        group: Normal form group to walk
        radius: Ball radius, >= 0
        budget: Largest number of elements allowed

    Returns:
        BallGraph with exact BFS distances

    Raises:
        BudgetExceeded: the ball would hold more than `budget` elements
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    index: Dict[Token, int] = {group.identity: 0}
    elements: List[Token] = [group.identity]
    distances: List[int] = [0]
    edges: List[Tuple[int, int, int]] = []
    seen_edges = set()
    frontier = [group.identity]
    escapes = False

    for layer in range(radius + 1):
        following: List[Token] = []
        for element in frontier:
            u = index[element]
            for g, neighbor in group.neighbors(element):
                if neighbor not in index:
                    if layer == radius:
                        escapes = True
                        continue
                    if len(elements) >= budget:
                        raise BudgetExceeded(budget, layer)
                    index[neighbor] = len(elements)
                    elements.append(neighbor)
                    distances.append(layer + 1)
                    following.append(neighbor)
                v = index[neighbor]
                key = (min(u, v), max(u, v), min(g, group.inverse(g)))
                if key not in seen_edges:
                    seen_edges.add(key)
                    edges.append((u, v, g))
        if not following and layer < radius:
            break
        frontier = following
    # no element of the ball has a neighbour outside it: the group is finite
    exhausted = not escapes

    logger.debug(f"ball of radius {radius}: {len(elements)} elements, {len(edges)} edges")
    return BallGraph(radius, tuple(elements), np.array(distances, dtype=np.int64), tuple(edges), exhausted)


@dataclass(frozen=True)
class EndsEstimate:
    verdict: EndCount
    radius: int
    ball_size: int
    sweep: pd.DataFrame = field(repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "radius": self.radius,
            "ballSize": self.ball_size,
            "sweep": self.sweep.to_dict(orient="records"),
        }

    def to_tsv(self, path: Optional[str] = None) -> str:
        text = self.sweep.to_csv(sep="\t", index=False)
        if path is not None:
            with open(path, "w") as f:
                f.write(text)
        return text


def component_counts(region: BallGraph, k: int) -> Tuple[int, int]:
    """
    Components left after removing the elements at distance < k.

    Returns:
        (all components, components reaching the boundary sphere)
    """
    graph = region.graph(min_distance=k)
    components = list(nx.connected_components(graph))
    touching = sum(1 for c in components if any(region.distance[v] == region.radius for v in c))
    return len(components), touching


def _verdict(counts: Sequence[int]) -> EndCount:
    if all(c == 1 for c in counts):
        return EndCount.ONE
    if all(c == 2 for c in counts):
        return EndCount.TWO
    if len(counts) >= 3 and all(b > a for a, b in zip(counts, counts[1:])):
        return EndCount.INF
    return EndCount.UNKNOWN


def estimate_ends(group: NormalFormGroup, k: int, radius: int, margin: int = DEFAULT_MARGIN,
                  budget: int = DEFAULT_BUDGET, sweep: Optional[Sequence[int]] = None) -> EndsEstimate:
    """
    Estimate the number of ends from one ball.

    The sweep runs over removed radii 1..k unless given. A finite group that
    is used up before the ball's radius gives ZERO; otherwise the counts of
    components reaching the boundary decide: all 1 gives ONE, all 2 gives TWO,
    strict growth over at least three values gives INF, anything else UNKNOWN.

    Raises:
        InsufficientRadius: radius - k is below the margin
        BudgetExceeded: the ball does not fit the budget
    """
    sweep = list(sweep) if sweep is not None else list(range(1, k + 1))
    if not sweep or min(sweep) < 1:
        raise ValueError("sweep values must be >= 1")
    largest = max(sweep)
    if radius - largest < margin:
        raise InsufficientRadius(largest, radius, margin)

    region = ball(group, radius, budget)
    rows = []
    for removed in sweep:
        total, touching = component_counts(region, removed)
        rows.append({"k": removed, "components": total, "touching": touching})
    table = pd.DataFrame(rows, columns=["k", "components", "touching"])

    if region.exhausted:
        verdict = EndCount.ZERO
    else:
        verdict = _verdict(table["touching"].tolist())
    logger.info(f"ends estimate at radius {radius}: {verdict.value}")
    return EndsEstimate(verdict, radius, len(region), table)


def to_dot(region: BallGraph, group: NormalFormGroup) -> str:
    """Graphviz text of a ball, nodes labeled by normal form"""
    lines = ["graph ball {"]
    for i, element in enumerate(region.elements):
        label = group.show(element).replace('"', "'")
        lines.append(f'  n{i} [label="{label}", distance={int(region.distance[i])}];')
    for u, v, g in region.edges:
        lines.append(f'  n{u} -- n{v} [label="{group.generators[g]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
