"""
Semistability Rule Table
"""

from ..groups.expr import (
    AmalgamOverFinite, DirectProduct, Extension, FiniteIndex, Free, FreeProduct,
    GraphOfGroups, GroupExpr, HNNOverFinite, Opaque, QuotientByFiniteNormal, Surface,
)
from .base_rule import InvariantRule
from .ends_rule import EndsRule
from .trace import Fact, annotation, constructor
from .types import EndCount, TriState


class SemistabilityRule(InvariantRule):
    """Semistability at infinity; FALSE only ever comes from an annotation"""

    kind = "semistable"

    def __init__(self, strict: bool = False, engine=None):
        super().__init__("semistable", strict, engine)
        self.ends_rule = engine.rules["ends"] if engine is not None else EndsRule(strict)

    def unknown(self):
        return TriState.UNKNOWN

    def derive(self, expr: GroupExpr) -> Fact:
        ends = self.ends_rule.evaluate(expr)
        if ends.value in (EndCount.ZERO, EndCount.TWO):
            return self.fire("R-SS-BASE", expr, TriState.TRUE, [ends])
        if isinstance(expr, Surface):
            return self.fire("R-SS-SURF", expr, TriState.TRUE, [constructor(str(expr))])
        if isinstance(expr, Free):
            return self.fire("R-SS-FREE", expr, TriState.TRUE, [constructor(str(expr))])
        if isinstance(expr, (DirectProduct, Extension)):
            return self._product(expr)
        if isinstance(expr, (FiniteIndex, QuotientByFiniteNormal)):
            base = self.evaluate(expr.base)
            if not base.value.determined:
                return self.undetermined(expr)
            return self.fire("R-SS-VIRTUAL", expr, base.value, [base, constructor(str(expr))])
        if isinstance(expr, (FreeProduct, AmalgamOverFinite, HNNOverFinite, GraphOfGroups)):
            return self._graph_like(expr)
        if isinstance(expr, Opaque):
            value = TriState.of(expr.annotations.effective_semistable)
            if not value.determined:
                return self.undetermined(expr)
            if expr.annotations.semistable is not None:
                ground = annotation(expr.name, "semistable", str(expr.annotations.semistable).lower())
            elif expr.annotations.one_relator:
                ground = annotation(expr.name, "oneRelator", "true")
            else:
                ground = annotation(expr.name, "ends", expr.annotations.ends.value)
            return self.fire("R-ANNOT", expr, value, [ground])
        return self.undetermined(expr)

    def _product(self, expr: GroupExpr) -> Fact:
        parts = expr.children()
        facts = [self.ends_rule.evaluate(p) for p in parts]
        infinite = [(p, f) for p, f in zip(parts, facts) if f.value in (EndCount.ONE, EndCount.TWO, EndCount.INF)]
        if len(infinite) >= 2:
            return self.fire("R-SS-PROD", expr, TriState.TRUE, [f for _, f in infinite[:2]])
        if len(infinite) == 1 and all(f.value is EndCount.ZERO for f in facts if f is not infinite[0][1]):
            inner = self.evaluate(infinite[0][0])
            if inner.value.determined:
                return self.fire("R-SS-VIRTUAL", expr, inner.value, [inner] + facts)
        return self.undetermined(expr)

    def _graph_like(self, expr: GroupExpr) -> Fact:
        if not self.allowed("AXIOM-SS-GRAPH"):
            self.logger.debug(f"AXIOM-SS-GRAPH disabled for {expr}")
            return self.undetermined(expr)
        pieces = [self.evaluate(child) for child in expr.children()]
        if all(p.value is TriState.TRUE for p in pieces):
            return self.fire("AXIOM-SS-GRAPH", expr, TriState.TRUE, pieces + [constructor(str(expr))])
        return self.undetermined(expr)
