"""
Structural normalization of group expressions
"""

from functools import lru_cache
from typing import List, Tuple

from .expr import (
    AmalgamOverFinite, DirectProduct, Extension, FiniteIndex, FreeProduct, GraphOfGroups,
    GroupExpr, HNNOverFinite, QuotientByFiniteNormal, Trivial,
)
from .grammar import to_text


def serialize(expr: GroupExpr) -> bytes:
    """Canonical byte serialization; the sort key for product spines"""
    return to_text(expr).encode("utf-8")


def _spine(kind: type, factors: Tuple[GroupExpr, ...]) -> GroupExpr:
    flat: List[GroupExpr] = []
    for factor in factors:
        factor = normalize(factor)
        if isinstance(factor, kind):
            flat.extend(factor.factors)
        elif not isinstance(factor, Trivial):
            flat.append(factor)
    flat.sort(key=serialize)
    if not flat:
        return Trivial()
    if len(flat) == 1:
        return flat[0]
    return kind(tuple(flat))


@lru_cache(maxsize=4096)
def normalize(expr: GroupExpr) -> GroupExpr:
    """
    Flatten product spines into sorted n-ary form and drop trivial factors.

    Also removes index-1 FiniteIndex and order-1 QuotientByFiniteNormal
    wrappers, orders amalgam sides and sorts graph edges. Idempotent.
    """
    if isinstance(expr, (DirectProduct, FreeProduct)):
        return _spine(type(expr), expr.factors)

    if isinstance(expr, AmalgamOverFinite):
        left, right = normalize(expr.left), normalize(expr.right)
        sides = [(left, expr.left_index), (right, expr.right_index)]
        sides.sort(key=lambda side: serialize(side[0]))
        (left, left_index), (right, right_index) = sides
        return AmalgamOverFinite(left, right, expr.edge_order, left_index, right_index)

    if isinstance(expr, HNNOverFinite):
        return HNNOverFinite(normalize(expr.base), expr.edge_order)

    if isinstance(expr, Extension):
        return Extension(normalize(expr.kernel), normalize(expr.quotient))

    if isinstance(expr, FiniteIndex):
        base = normalize(expr.base)
        return base if expr.index == 1 else FiniteIndex(base, expr.index)

    if isinstance(expr, QuotientByFiniteNormal):
        base = normalize(expr.base)
        return base if expr.order == 1 else QuotientByFiniteNormal(base, expr.order)

    if isinstance(expr, GraphOfGroups):
        edges = sorted((min(u, v), max(u, v), order) for u, v, order in expr.edges)
        return GraphOfGroups(tuple(normalize(v) for v in expr.vertices), tuple(edges))

    return expr
