"""
Invariant Engine
Runs the rule tables over an expression and assembles the invariant report
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ..errors import AnalysisError
from ..groups.expr import GroupExpr
from ..towers.protype import ProType
from .base_rule import InvariantRule
from .ends_rule import EndsRule
from .pnumber_rule import P3RRule, PNumberRule
from .protype_rule import ProTypeRule
from .semistability_rule import SemistabilityRule
from .trace import Fact, TraceEntry, derive, merge
from .types import EndCount, H2Rank, PNumber, TriState

logger = logging.getLogger(__name__)

PROPER_EQUIVALENCE_DEGREE = 2


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one expression with their joint derivation"""
    ends: EndCount
    semistable: TriState
    pro_type: ProType
    p_number: PNumber
    h2rank: H2Rank
    p3r: TriState
    pro_stable: TriState
    trace: Tuple[TraceEntry, ...]
    n: int = PROPER_EQUIVALENCE_DEGREE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ends": self.ends.value,
            "semistable": self.semistable.value,
            "proType": str(self.pro_type),
            "pNumber": self.p_number.display,
            "h2rank": self.h2rank.value,
            "p3r": self.p3r.value,
            "proStable": self.pro_stable.value,
            "n": self.n,
            "trace": [entry.to_dict() for entry in self.trace],
        }


class InvariantEngine:
    """Holds one rule table per invariant; tables consult each other through it"""

    def __init__(self, strict: bool = False):
        self.strict = strict
        self.rules: Dict[str, InvariantRule] = {}
        self.rules["ends"] = EndsRule(strict, self)
        self.rules["semistable"] = SemistabilityRule(strict, self)
        self.rules["proType"] = ProTypeRule(strict, self)
        self.rules["p3r"] = P3RRule(strict, self)
        self.rules["pNumber"] = PNumberRule(strict, self)
        logger.debug(f"Invariant engine ready (strict={strict}) with {', '.join(self.rules)}")

    def ends(self, expr: GroupExpr) -> Fact:
        return self.rules["ends"].evaluate(expr)

    def semistable(self, expr: GroupExpr) -> Fact:
        return self.rules["semistable"].evaluate(expr)

    def pro_type(self, expr: GroupExpr) -> Fact:
        """Raises NotOneEnded for groups whose ends are determined and not 1"""
        return self.rules["proType"].evaluate(expr)

    def p3r(self, expr: GroupExpr) -> Fact:
        return self.rules["p3r"].evaluate(expr)

    def p_number(self, expr: GroupExpr) -> Fact:
        """Raises NotOneEnded or NotKnownP3R when the boundary number is undefined here"""
        return self.rules["pNumber"].evaluate(expr)

    def h2rank(self, expr: GroupExpr, p_number: Fact) -> Fact:
        """rank H^2(G; ZG) from the boundary number"""
        value = p_number.value.h2rank
        conclusion = f"h2rank({expr}) = {value.value}"
        if not value.determined:
            return Fact(value, conclusion)
        return derive("R-H2", value, conclusion, [p_number])

    def report(self, expr: GroupExpr) -> InvariantReport:
        """
        Compute every invariant. Operations that do not apply degrade their
        field to UNKNOWN instead of raising.

        Args:
            expr: Expression to analyze

        Returns:
            InvariantReport with the merged trace
        """
        ends = self.ends(expr)
        semistable = self.semistable(expr)
        p3r = self.p3r(expr)
        facts = [ends, semistable, p3r]

        pro_type = ProType.unknown()
        p_number = PNumber.UNKNOWN
        h2rank = H2Rank.UNKNOWN
        pro_stable = TriState.UNKNOWN
        if ends.value is EndCount.ONE or not ends.value.determined:
            try:
                pro_fact = self.pro_type(expr)
                pro_type = pro_fact.value
                facts.append(pro_fact)
                number = self.p_number(expr)
                p_number = number.value
                facts.append(number)
                if p_number.determined:
                    h2 = self.h2rank(expr, number)
                    h2rank = h2.value
                    stable = derive("R-PROSTABLE", TriState.of(p_number is not PNumber.PINF),
                                    f"proStable({expr}) = {'FALSE' if p_number is PNumber.PINF else 'TRUE'}",
                                    [number])
                    pro_stable = stable.value
                    facts.extend([h2, stable])
            except AnalysisError as e:
                logger.debug(f"{expr}: {e}")

        report = InvariantReport(
            ends=ends.value,
            semistable=semistable.value,
            pro_type=pro_type,
            p_number=p_number,
            h2rank=h2rank,
            p3r=p3r.value,
            pro_stable=pro_stable,
            trace=merge(*(f.trace for f in facts)),
        )
        self._check(expr, report)
        return report

    @staticmethod
    def _check(expr: GroupExpr, report: InvariantReport):
        if report.p_number is PNumber.P1 and report.semistable is TriState.TRUE:
            raise AnalysisError(f"{expr}: boundary number 1 cannot occur for a semistable group")

    def clear(self):
        for rule in self.rules.values():
            rule.clear()
