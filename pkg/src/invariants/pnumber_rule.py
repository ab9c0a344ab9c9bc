"""
P3R and Boundary Number Rule Tables
"""

from ..errors import NotKnownP3R, NotOneEnded
from ..groups.expr import FiniteIndex, GroupExpr, Opaque, QuotientByFiniteNormal
from ..towers.protype import ONE_OF_THREE, ProKind
from .base_rule import InvariantRule
from .trace import Fact, annotation, constructor
from .types import EndCount, PNumber, TriState

_BY_TYPE = {
    ProKind.TRIVIAL: PNumber.P0,
    ProKind.PRO_Z: PNumber.P2,
    ProKind.TELESCOPIC_INF: PNumber.PINF,
}


class P3RRule(InvariantRule):
    """Proper 3-realizability"""

    kind = "p3r"

    def __init__(self, strict: bool = False, engine=None):
        super().__init__("p3r", strict, engine)

    def unknown(self):
        return TriState.UNKNOWN

    def derive(self, expr: GroupExpr) -> Fact:
        if isinstance(expr, Opaque):
            notes = expr.annotations
            if notes.p3r is not None:
                return self.fire("R-ANNOT", expr, TriState.of(notes.p3r),
                                 [annotation(expr.name, "p3r", str(notes.p3r).lower())])
            if notes.one_relator:
                return self.fire("R-ANNOT", expr, TriState.TRUE, [annotation(expr.name, "oneRelator", "true")])

        ends = self.engine.rules["ends"].evaluate(expr)
        if ends.value in (EndCount.ZERO, EndCount.TWO):
            return self.fire("R-P3R-BASE", expr, TriState.TRUE, [ends])
        if isinstance(expr, (FiniteIndex, QuotientByFiniteNormal)):
            base = self.evaluate(expr.base)
            if base.value.determined:
                return self.fire("R-P3R-VIRTUAL", expr, base.value, [base, constructor(str(expr))])
        if ends.value is not EndCount.ONE:
            return self.undetermined(expr)

        pro_type = self.engine.rules["proType"].evaluate(expr)
        kind = pro_type.value.kind
        if pro_type.value.telescopic:
            semistable = self.engine.rules["semistable"].evaluate(expr)
            premises = [pro_type] + ([semistable] if semistable.value is TriState.TRUE else [])
            return self.fire("R-P3R-TEL", expr, TriState.TRUE, premises)
        if kind is ProKind.OTHER and pro_type.value.tag == ONE_OF_THREE:
            return self.fire("R-P3R-TEL", expr, TriState.TRUE, [pro_type])
        return self.undetermined(expr)


class PNumberRule(InvariantRule):
    """Boundary number of a 1-ended P3R group"""

    kind = "pNumber"

    def __init__(self, strict: bool = False, engine=None):
        super().__init__("pNumber", strict, engine)

    def unknown(self):
        return PNumber.UNKNOWN

    def derive(self, expr: GroupExpr) -> Fact:
        ends = self.engine.rules["ends"].evaluate(expr)
        if ends.value.determined and ends.value is not EndCount.ONE:
            raise NotOneEnded(f"{expr} has {ends.value.value} ends; the boundary number needs one end")
        p3r = self.engine.rules["p3r"].evaluate(expr)
        if p3r.value is not TriState.TRUE:
            raise NotKnownP3R(f"{expr} is not known to be properly 3-realizable")

        if isinstance(expr, (FiniteIndex, QuotientByFiniteNormal)):
            base = self.evaluate(expr.base)
            if base.value.determined:
                return self.fire("R-PNUM-VIRTUAL", expr, base.value, [base, constructor(str(expr))])

        pro_type = self.engine.rules["proType"].evaluate(expr)
        value = _BY_TYPE.get(pro_type.value.kind)
        if value is None:
            return self.undetermined(expr)
        return self.fire("R-PNUM", expr, value, [pro_type, p3r])
