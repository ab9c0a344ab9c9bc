"""
Pro-type Rule Table
Type of the fundamental pro-group at the end of a 1-ended group
"""

from typing import List, Optional

from ..errors import NotOneEnded
from ..groups.expr import (
    DirectProduct, Extension, FiniteIndex, GraphOfGroups, GroupExpr, Int, Opaque,
    QuotientByFiniteNormal, Surface, direct_product,
)
from ..towers.protype import ONE_OF_THREE, ProKind, ProType
from .base_rule import InvariantRule
from .ends_rule import EndsRule
from .trace import Fact, annotation, constructor, derive as derive_fact
from .types import EndCount


class ProTypeRule(InvariantRule):
    """Pro-isomorphism type of the fundamental pro-group"""

    kind = "proType"

    def __init__(self, strict: bool = False, engine=None):
        super().__init__("proType", strict, engine)
        self.ends_rule = engine.rules["ends"] if engine is not None else EndsRule(strict)

    def unknown(self):
        return ProType.unknown()

    def derive(self, expr: GroupExpr) -> Fact:
        ends = self.ends_rule.evaluate(expr)
        if ends.value.determined and ends.value is not EndCount.ONE:
            raise NotOneEnded(f"{expr} has {ends.value.value} ends; the pro-type is defined for 1-ended groups")

        if isinstance(expr, Surface):
            return self.fire("R-PRO-SURF", expr, ProType.pro_z(), [ends, constructor(str(expr))])
        if isinstance(expr, DirectProduct):
            return self._product(expr, list(expr.factors), [])
        if isinstance(expr, Extension):
            return self._extension(expr)
        if isinstance(expr, (FiniteIndex, QuotientByFiniteNormal)):
            base = self.evaluate(expr.base)
            if not base.value.determined:
                return self.undetermined(expr)
            return self.fire("R-PRO-VIRTUAL", expr, base.value, [base, constructor(str(expr))])
        if isinstance(expr, GraphOfGroups) and len(expr.vertices) == 1 and not expr.edges:
            vertex = self.evaluate(expr.vertices[0])
            if not vertex.value.determined:
                return self.undetermined(expr)
            return self.fire("R-PRO-VIRTUAL", expr, vertex.value, [vertex, constructor(str(expr))])
        if isinstance(expr, Opaque):
            return self._opaque(expr)
        return self.undetermined(expr)

    def _opaque(self, expr: Opaque) -> Fact:
        notes = expr.annotations
        if notes.pro_type is not None:
            return self.fire("R-ANNOT", expr, notes.pro_type,
                             [annotation(expr.name, "proType", str(notes.pro_type))])
        if notes.one_relator and notes.effective_ends is EndCount.ONE:
            return self.fire("R-ANNOT", expr, ProType.other(ONE_OF_THREE),
                             [annotation(expr.name, "oneRelator", "true")])
        return self.undetermined(expr)

    def _extension(self, expr: Extension) -> Fact:
        kernel = self.ends_rule.evaluate(expr.kernel)
        quotient = self.ends_rule.evaluate(expr.quotient)
        infinite = (EndCount.ONE, EndCount.TWO, EndCount.INF)
        if kernel.value in infinite and quotient.value in infinite:
            return self._product(expr, [expr.kernel, expr.quotient], [kernel, quotient], rule="R-EXT")
        if kernel.value is EndCount.ZERO and quotient.value is EndCount.ONE:
            inner = self.evaluate(expr.quotient)
        elif quotient.value is EndCount.ZERO and kernel.value is EndCount.ONE:
            inner = self.evaluate(expr.kernel)
        else:
            return self.undetermined(expr)
        if not inner.value.determined:
            return self.undetermined(expr)
        return self.fire("R-PRO-VIRTUAL", expr, inner.value, [inner, kernel, quotient])

    def _product(self, expr: GroupExpr, parts: List[GroupExpr], extra: List[Fact], rule: Optional[str] = None) -> Fact:
        ends = [self.ends_rule.evaluate(p) for p in parts]
        if any(not f.value.determined for f in ends):
            return self.undetermined(expr)
        infinite = [(p, f) for p, f in zip(parts, ends) if f.value is not EndCount.ZERO]
        premises = list(extra)
        if rule == "R-EXT":
            conclusion = f"{expr} ~ {parts[0]} x {parts[1]}"
            premises = [derive_fact("R-EXT", None, conclusion, extra + [constructor(str(expr))])]

        if len(infinite) == 1:
            inner = self.evaluate(infinite[0][0])
            if not inner.value.determined:
                return self.undetermined(expr)
            return self.fire("R-PRO-VIRTUAL", expr, inner.value, [inner] + ends)

        groups = [p for p, _ in infinite]
        if len(groups) == 3 and all(isinstance(g, Int) for g in groups):
            return self.fire("R-PRO-REP", expr, ProType.trivial(), premises + ends)
        if len(groups) == 2 and all(f.value is EndCount.TWO for _, f in infinite):
            return self.fire("R-PRO-REP", expr, ProType.pro_z(), premises + ends)

        for position, (single, single_ends) in enumerate(infinite):
            rest = groups[:position] + groups[position + 1:]
            pinned = self._pair(expr, single_ends, rest, premises)
            if pinned is not None:
                return pinned
        return self.fire("R-PRO-CONSTRAINED", expr, ProType.other(ONE_OF_THREE),
                         premises + [f for _, f in infinite[:2]])

    def _pair(self, expr: GroupExpr, single_ends: Fact, rest: List[GroupExpr], premises: List[Fact]) -> Optional[Fact]:
        """Pinned pro-type of (two-ended factor) x (rest), when a rule applies"""
        if single_ends.value is not EndCount.TWO:
            return None
        other = rest[0] if len(rest) == 1 else direct_product(*rest)
        other_ends = self.ends_rule.evaluate(other)
        if other_ends.value is EndCount.TWO:
            return self.fire("R-PRO-REP", expr, ProType.pro_z(), premises + [single_ends, other_ends])
        if other_ends.value is EndCount.INF:
            return self.fire("R-PRO-TEL", expr, ProType.telescopic_inf(), premises + [single_ends, other_ends])
        if other_ends.value is EndCount.ONE and self.allowed("R-SCI-STACK"):
            other_type = self.evaluate(other)
            if other_type.value.kind in (ProKind.TRIVIAL, ProKind.PRO_Z):
                return self.fire("R-SCI-STACK", expr, ProType.trivial(), premises + [single_ends, other_type])
        return None

