"""
Graph-of-groups decompositions over finite edge groups
Derived from the constructors of an infinite-ended expression
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..errors import NotInfiniteEnded, Undecomposable
from ..invariants.types import EndCount
from .expr import (
    AmalgamOverFinite, DirectProduct, Extension, FiniteIndex, Free, FreeProduct, GraphOfGroups, GroupExpr,
    HNNOverFinite, QuotientByFiniteNormal, Trivial, finite_order,
)
from .normalize import normalize

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class Decomposition:
    """
    Vertex groups and edges of a decomposition.

    `residual` lists vertices that are infinite-ended but could not be split
    further; it is empty unless the caller asked to keep such pieces.
    `rules` names the constructors that contributed splittings.
    """
    vertices: Tuple[GroupExpr, ...]
    edges: Tuple[Edge, ...]
    residual: Tuple[int, ...] = ()
    rules: Tuple[str, ...] = field(default=(), compare=False)

    def vertex_set(self) -> Tuple[GroupExpr, ...]:
        return tuple(dict.fromkeys(self.vertices))


class _Builder:
    def __init__(self, engine, keep_undecomposable: bool):
        self.engine = engine
        self.keep = keep_undecomposable
        self.vertices: List[GroupExpr] = []
        self.edges: List[Edge] = []
        self.residual: List[int] = []
        self.rules: List[str] = []

    def vertex(self, group: GroupExpr) -> int:
        self.vertices.append(group)
        return len(self.vertices) - 1

    def edge(self, u: int, v: int, order: int):
        self.edges.append((u, v, order))

    def note(self, rule: str):
        if rule not in self.rules:
            self.rules.append(rule)

    def piece(self, group: GroupExpr) -> int:
        """Add one factor or side; returns the vertex to attach edges to"""
        ends = self.engine.ends(group).value
        if ends in (EndCount.ZERO, EndCount.ONE):
            return self.vertex(group)
        if ends is EndCount.TWO:
            if isinstance(group, (FreeProduct, AmalgamOverFinite, HNNOverFinite, GraphOfGroups)):
                return self.split(group)
            anchor = self.vertex(Trivial())
            self.edge(anchor, anchor, 1)
            return anchor
        if ends is EndCount.INF:
            return self.split(group)
        return self.undecomposable(group, "its number of ends is unknown")

    def undecomposable(self, group: GroupExpr, reason: str) -> int:
        if not self.keep:
            raise Undecomposable(f"{group} cannot be decomposed: {reason}")
        index = self.vertex(group)
        self.residual.append(index)
        return index

    def split(self, group: GroupExpr) -> int:
        if isinstance(group, FreeProduct):
            self.note("R-FREE")
            anchors = [self.piece(factor) for factor in group.factors]
            for u, v in zip(anchors, anchors[1:]):
                self.edge(u, v, 1)
            return anchors[0]

        if isinstance(group, Free):
            self.note("R-FREE")
            anchor = self.vertex(Trivial())
            for _ in range(group.rank):
                self.edge(anchor, anchor, 1)
            return anchor

        if isinstance(group, AmalgamOverFinite):
            self.note("R-AMAL")
            left, right = self.piece(group.left), self.piece(group.right)
            self.edge(left, right, group.edge_order)
            return left

        if isinstance(group, HNNOverFinite):
            self.note("R-HNN")
            base = self.piece(group.base)
            self.edge(base, base, group.edge_order)
            return base

        if isinstance(group, GraphOfGroups):
            self.note("R-GRAPH")
            anchors = [self.piece(v) for v in group.vertices]
            for u, v, order in group.edges:
                self.edge(anchors[u], anchors[v], order)
            return anchors[0]

        if isinstance(group, (FiniteIndex, QuotientByFiniteNormal)):
            # vertices of the base, which agree with the real ones up to commensurability
            self.note("R-QI1" if isinstance(group, FiniteIndex) else "R-QI2")
            return self.piece(group.base)

        finite, infinite = self._finite_part(group)
        if infinite is not None:
            return self._twisted(group, finite, infinite)

        return self.undecomposable(group, "no splitting is derivable from its constructors")

    def _finite_part(self, group: GroupExpr) -> Tuple[Optional[GroupExpr], Optional[GroupExpr]]:
        """(finite part, infinite part) of a product or finite-kernel extension"""
        if isinstance(group, DirectProduct):
            finite = [f for f in group.factors if self.engine.ends(f).value is EndCount.ZERO]
            infinite = [f for f in group.factors if f not in finite]
            if len(infinite) == 1 and finite:
                return DirectProduct(tuple(finite)) if len(finite) > 1 else finite[0], infinite[0]
        if isinstance(group, Extension) and self.engine.ends(group.kernel).value is EndCount.ZERO:
            return group.kernel, group.quotient
        return None, None

    def _twisted(self, group: GroupExpr, finite: GroupExpr, infinite: GroupExpr) -> int:
        inner = _Builder(self.engine, self.keep)
        inner.split(infinite)
        scale = finite_order(finite) or 1
        offset = len(self.vertices)
        for position, vertex in enumerate(inner.vertices):
            if isinstance(group, Extension):
                lifted = normalize(Extension(finite, vertex))
            else:
                lifted = normalize(DirectProduct((vertex, finite)))
            if position in inner.residual:
                self.undecomposable(lifted, "an infinite-ended piece could not be split")
            else:
                self.vertex(lifted)
        for u, v, order in inner.edges:
            self.edge(u + offset, v + offset, order * scale)
        for rule in inner.rules:
            self.note(rule)
        return offset


def vertex_decomposition(expr: GroupExpr, engine, keep_undecomposable: bool = False) -> Decomposition:
    """
    Decompose an infinite-ended group over finite edge groups.

    Free product factors, amalgam sides, HNN bases and graph vertices become
    vertices; 2-ended pieces contribute a trivial vertex with a loop and
    infinite-ended pieces are split recursively. Finite-index and finite-quotient
    pieces contribute the vertices of their base, each commensurable with a
    vertex group of the piece itself.

    Args:
        expr: Expression with infinitely many ends
        engine: InvariantEngine used to read off the ends of pieces
        keep_undecomposable: Keep unsplittable infinite-ended pieces as residual
            vertices instead of raising Undecomposable

    Returns:
        Decomposition of the normalized expression
    """
    expr = normalize(expr)
    ends = engine.ends(expr).value
    if ends is EndCount.UNKNOWN:
        raise Undecomposable(f"{expr}: number of ends unknown; annotate it or give a decomposition")
    if ends is not EndCount.INF:
        raise NotInfiniteEnded(f"{expr} has {ends.value} ends")

    builder = _Builder(engine, keep_undecomposable)
    builder.split(expr)
    logger.debug(f"{expr}: {len(builder.vertices)} vertices, {len(builder.edges)} edges")
    return Decomposition(tuple(builder.vertices), tuple(builder.edges),
                         tuple(builder.residual), tuple(builder.rules))
