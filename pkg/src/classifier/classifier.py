"""
Classifier
Assigns class labels by rewriting with the classification results and
compares two expressions.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..errors import AnalysisError
from ..groups.decomposition import vertex_decomposition
from ..groups.expr import (
    DirectProduct, Extension, FiniteIndex, Free, FreeProduct, GroupExpr, Int, Opaque,
    QuotientByFiniteNormal,
)
from ..groups.normalize import normalize
from ..invariants.base_rule import InvariantRule
from ..invariants.engine import InvariantEngine
from ..invariants.trace import Fact, TraceEntry, audit, constructor, derive, merge
from ..invariants.types import EndCount, TriState
from .labels import MERGED, ClassLabel, LabelKind

logger = logging.getLogger(__name__)


def representative(label: ClassLabel) -> Optional[GroupExpr]:
    """A fixed group in the class, when the label determines one"""
    if label.kind is LabelKind.Z:
        return Int()
    if label.kind is LabelKind.Z2:
        return DirectProduct((Int(), Int()))
    if label.kind is LabelKind.Z3:
        return DirectProduct((Int(), Int(), Int()))
    if label.kind is LabelKind.F2xZ:
        return DirectProduct((Free(2), Int()))
    if label.kind is LabelKind.INF:
        if not label.members:
            return Free(2)
        pieces = [representative(m) for m in sorted(label.members, key=str)]
        if None in pieces:
            return None
        # G is 1-ended here, so G * G stands for the whole free power
        return normalize(FreeProduct(tuple(pieces * 2 if len(pieces) == 1 else pieces)))
    return None


class Classifier(InvariantRule):
    """Class label of an expression, derived from the invariant engine's facts"""

    kind = "class"

    def __init__(self, engine: InvariantEngine):
        super().__init__("class", engine.strict, engine)

    def unknown(self):
        return ClassLabel.unknown()

    def derive(self, expr: GroupExpr) -> Fact:
        inherited = self._inherited(expr)
        if inherited is not None:
            return inherited

        ends = self.engine.ends(expr)
        if ends.value is EndCount.ZERO:
            return self.fire("R-0E", expr, ClassLabel.fin(), [ends])
        if ends.value is EndCount.TWO:
            return self.fire("R-2E", expr, ClassLabel.z(), [ends])
        if ends.value is EndCount.ONE:
            return self._one_ended(expr, ends)
        if ends.value is EndCount.INF:
            return self._infinite(expr, ends)
        return self.undetermined(expr)

    def _inherited(self, expr: GroupExpr) -> Optional[Fact]:
        """Finite index subgroups and finite normal quotients keep the class"""
        if isinstance(expr, FiniteIndex):
            return self._pass_down("R-QI1", expr, expr.base, [])
        if isinstance(expr, QuotientByFiniteNormal):
            return self._pass_down("R-QI2", expr, expr.base, [])
        if isinstance(expr, DirectProduct):
            ends = [self.engine.ends(f) for f in expr.factors]
            finite = [f for f in ends if f.value is EndCount.ZERO]
            infinite = [g for g, f in zip(expr.factors, ends) if f.value is not EndCount.ZERO]
            if finite and infinite:
                rest = infinite[0] if len(infinite) == 1 else normalize(DirectProduct(tuple(infinite)))
                return self._pass_down("R-QI1", expr, rest, finite)
        if isinstance(expr, Extension):
            kernel = self.engine.ends(expr.kernel)
            quotient = self.engine.ends(expr.quotient)
            if kernel.value is EndCount.ZERO and quotient.value not in (EndCount.ZERO, EndCount.UNKNOWN):
                return self._pass_down("R-QI2", expr, expr.quotient, [kernel])
            if quotient.value is EndCount.ZERO and kernel.value not in (EndCount.ZERO, EndCount.UNKNOWN):
                return self._pass_down("R-QI1", expr, expr.kernel, [quotient])
        return None

    def _pass_down(self, rule: str, expr: GroupExpr, inner: GroupExpr, premises: List[Fact]) -> Fact:
        fact = self.evaluate(inner)
        if fact.value.kind is LabelKind.UNKNOWN:
            return self.undetermined(expr)
        return self.fire(rule, expr, fact.value, [fact, constructor(str(expr))] + premises)

    def _one_ended(self, expr: GroupExpr, ends: Fact) -> Fact:
        if isinstance(expr, DirectProduct):
            substituted = self._by_factor_classes(expr)
            if substituted is not None:
                return substituted
        if isinstance(expr, Extension):
            product = normalize(DirectProduct((expr.kernel, expr.quotient)))
            fact = self.evaluate(product)
            if fact.value.kind is not LabelKind.UNKNOWN:
                sides = [self.engine.ends(expr.kernel), self.engine.ends(expr.quotient)]
                return self.fire("R-EXT", expr, fact.value, [fact, constructor(str(expr))] + sides)

        semistable = self.engine.semistable(expr)
        if semistable.value is TriState.FALSE:
            return self.fire("R-PRO", expr, ClassLabel.one_other("non-semistable"), [ends, semistable])
        if semistable.value is TriState.UNKNOWN:
            return self.fire("R-PRO", expr, ClassLabel.one_other("semistability unknown"), [ends])
        pro_type = self.engine.pro_type(expr)
        premises = [ends, semistable] + ([pro_type] if pro_type.grounded else [])
        return self.fire("R-PRO", expr, ClassLabel.from_pro_type(pro_type.value), premises)

    def _by_factor_classes(self, expr: DirectProduct) -> Optional[Fact]:
        """Replace every factor by the representative of its class"""
        classes = [self.evaluate(f) for f in expr.factors]
        pieces = [representative(c.value) for c in classes]
        if None in pieces:
            return None
        substitute = normalize(DirectProduct(tuple(pieces)))
        if substitute == expr:
            return None
        fact = self.evaluate(substitute)
        if fact.value.kind is LabelKind.UNKNOWN:
            return None
        return self.fire("R-PROD", expr, fact.value, classes + [fact, constructor(str(expr))])

    def _infinite(self, expr: GroupExpr, ends: Fact) -> Fact:
        try:
            decomposition = vertex_decomposition(expr, self.engine, keep_undecomposable=True)
        except AnalysisError as e:
            self.logger.debug(f"{expr}: {e}")
            return self.undetermined(expr)

        residual = {decomposition.vertices[i] for i in decomposition.residual}
        vertex_facts: Dict[GroupExpr, Fact] = {}
        members: List[ClassLabel] = []
        for vertex in decomposition.vertex_set():
            if vertex in residual and normalize(vertex) == expr:
                return self.undetermined(expr)
            fact = self.evaluate(vertex)
            label = fact.value
            if label.kind is LabelKind.UNKNOWN:
                return self.undetermined(expr)
            vertex_facts[vertex] = fact
            if vertex in residual:
                if label.kind is not LabelKind.INF:
                    return self.undetermined(expr)
                # a free factor splits further into its own vertex classes
                members.extend(label.members)
            else:
                members.append(label)

        splitting = derive(
            decomposition.rules[0] if decomposition.rules else "R-GRAPH", None,
            f"{expr} splits over finite groups with vertices "
            f"{', '.join(str(v) for v in decomposition.vertex_set())}",
            [ends, constructor(str(expr))],
        )
        steps = [splitting]
        for rule in decomposition.rules[1:]:
            steps.append(derive(rule, None, f"{expr}: {rule} splitting applied", [splitting]))

        facts = list(vertex_facts.values())
        repeated = [v for v in decomposition.vertex_set()
                    if decomposition.vertices.count(v) > 1 and vertex_facts[v].value.kind not in MERGED]
        if repeated:
            steps.append(derive("R-POW", None,
                                f"{expr}: repeated vertex classes {', '.join(str(v) for v in repeated)} count once",
                                [vertex_facts[v] for v in repeated]))

        label = ClassLabel.infinite(members)
        dropped = sorted({str(m) for m in members if m.kind in MERGED})
        if dropped:
            steps.append(derive("R-MERGE", None, f"{expr}: vertex classes {', '.join(dropped)} merge away",
                                [f for f in facts if f.value.kind in MERGED]))

        one_ended = [f for f in facts if f.value.one_ended]
        if one_ended and all(f.value.trichotomy for f in one_ended):
            steps.append(derive("R-TEL-VERTEX", None,
                                f"{expr}: every 1-ended vertex class is of telescopic type", one_ended))
        return self.fire("R-GRAPH", expr, label, facts + steps)

    def label(self, expr: GroupExpr) -> ClassLabel:
        return self.evaluate(expr).value


class VerdictKind(Enum):
    EQUIVALENT = "EQUIVALENT"
    INEQUIVALENT = "INEQUIVALENT"
    UNKNOWN = "UNKNOWN"

    @property
    def exit_code(self) -> int:
        return {VerdictKind.EQUIVALENT: 0, VerdictKind.INEQUIVALENT: 1, VerdictKind.UNKNOWN: 2}[self]


@dataclass(frozen=True)
class Separator:
    invariant: str
    value_a: str
    value_b: str

    def to_dict(self) -> Dict[str, str]:
        return {"invariant": self.invariant, "a": self.value_a, "b": self.value_b}


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    a: GroupExpr
    b: GroupExpr
    label_a: ClassLabel
    label_b: ClassLabel
    derivation: Tuple[TraceEntry, ...] = ()
    separator: Optional[Separator] = None
    reason: str = ""
    missing: Tuple[str, ...] = ()
    strict: bool = False

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "verdict": self.kind.value,
            "label_a": str(self.label_a),
            "label_b": str(self.label_b),
        }
        if self.separator is not None:
            data["separator"] = self.separator.to_dict()
        if self.reason:
            data["reason"] = self.reason
        if self.missing:
            data["missing"] = list(self.missing)
        data["derivation"] = [entry.to_dict() for entry in self.derivation]
        return data


def opaque_leaves(expr: GroupExpr) -> Iterator[Opaque]:
    if isinstance(expr, Opaque):
        yield expr
    for child in expr.children():
        yield from opaque_leaves(child)


class Comparator:
    """Decides proper 2-equivalence of two expressions as far as the rules reach"""

    def __init__(self, classifier: Classifier):
        self.classifier = classifier
        self.engine: InvariantEngine = classifier.engine

    def _pro_fact(self, expr: GroupExpr, label: Fact) -> Optional[Fact]:
        if label.value.trichotomy:
            return label
        try:
            fact = self.engine.pro_type(expr)
        except AnalysisError:
            return None
        return fact if fact.value.pinned else None

    def _h2_fact(self, expr: GroupExpr) -> Optional[Fact]:
        try:
            number = self.engine.p_number(expr)
        except AnalysisError:
            return None
        if not number.value.determined:
            return None
        return self.engine.h2rank(expr, number)

    def separate(self, a: GroupExpr, b: GroupExpr, label_a: Fact, label_b: Fact) -> Optional[Tuple[Separator, Tuple[TraceEntry, ...]]]:
        """First determined invariant that differs, in order ends, semistable, proType, h2rank"""
        ends_a, ends_b = self.engine.ends(a), self.engine.ends(b)
        if ends_a.value.determined and ends_b.value.determined and ends_a.value is not ends_b.value:
            return Separator("ends", ends_a.value.value, ends_b.value.value), merge(ends_a.trace, ends_b.trace)

        ss_a, ss_b = self.engine.semistable(a), self.engine.semistable(b)
        if ss_a.value.determined and ss_b.value.determined and ss_a.value is not ss_b.value:
            return Separator("semistable", ss_a.value.value, ss_b.value.value), merge(ss_a.trace, ss_b.trace)

        both_one = ends_a.value is EndCount.ONE and ends_b.value is EndCount.ONE
        if both_one and ss_a.value is TriState.TRUE and ss_b.value is TriState.TRUE:
            pro_a, pro_b = self._pro_fact(a, label_a), self._pro_fact(b, label_b)
            if pro_a is not None and pro_b is not None:
                type_a = pro_a.value.pro_type() if isinstance(pro_a.value, ClassLabel) else pro_a.value
                type_b = pro_b.value.pro_type() if isinstance(pro_b.value, ClassLabel) else pro_b.value
                if type_a != type_b:
                    return Separator("proType", str(type_a), str(type_b)), merge(pro_a.trace, pro_b.trace)

        h2_a, h2_b = self._h2_fact(a), self._h2_fact(b)
        if h2_a is not None and h2_b is not None and h2_a.value is not h2_b.value:
            return Separator("h2rank", h2_a.value.value, h2_b.value.value), merge(h2_a.trace, h2_b.trace)
        return None

    def compare(self, a: GroupExpr, b: GroupExpr) -> Verdict:
        """
        Compare two expressions.

        Separating invariants are checked before labels, so an EQUIVALENT
        verdict never coexists with a determined difference.

        Returns:
            Verdict with its derivation
        """
        fact_a, fact_b = self.classifier.evaluate(a), self.classifier.evaluate(b)
        label_a, label_b = fact_a.value, fact_b.value

        separated = self.separate(a, b, fact_a, fact_b)
        if separated is not None:
            separator, trace = separated
            logger.info(f"{a} / {b}: separated by {separator.invariant}")
            return Verdict(VerdictKind.INEQUIVALENT, a, b, label_a, label_b, trace, separator,
                           strict=self.engine.strict)

        if label_a == label_b and label_a.pinned:
            logger.info(f"{a} / {b}: both {label_a}")
            return Verdict(VerdictKind.EQUIVALENT, a, b, label_a, label_b, merge(fact_a.trace, fact_b.trace),
                           strict=self.engine.strict)

        missing = []
        for leaf in list(opaque_leaves(a)) + list(opaque_leaves(b)):
            keys = leaf.annotations.missing()
            entry = f"{leaf.name}: {', '.join(keys)}"
            if keys and entry not in missing:
                missing.append(entry)
        if missing:
            reason = "missing annotations"
        elif label_a.pinned and label_b.pinned:
            reason = f"{label_a} and {label_b} differ, but differing vertex classes do not prove inequivalence"
        else:
            blocking = [str(l) for l in (label_a, label_b) if not l.pinned]
            reason = f"{' and '.join(dict.fromkeys(blocking))} does not name a single class"
        logger.info(f"{a} / {b}: unknown ({reason})")
        return Verdict(VerdictKind.UNKNOWN, a, b, label_a, label_b, merge(fact_a.trace, fact_b.trace),
                       reason=reason, missing=tuple(missing), strict=self.engine.strict)


def explain(verdict: Verdict) -> str:
    """Human-readable derivation, one rule application per line"""
    lines = [f"{verdict.a} vs {verdict.b}: {verdict.kind.value}",
             f"  class({verdict.a}) = {verdict.label_a}",
             f"  class({verdict.b}) = {verdict.label_b}"]
    if verdict.separator is not None:
        s = verdict.separator
        lines.append(f"  separated by {s.invariant}: {s.value_a} vs {s.value_b}")
    if verdict.reason:
        lines.append(f"  unknown: {verdict.reason}")
    for item in verdict.missing:
        lines.append(f"    missing {item}")
    for step, entry in enumerate(verdict.derivation, start=1):
        lines.append(f"  {step}. [{entry.rule}] {entry.conclusion}")
        lines.append(f"       by: {entry.cite}")
        for premise in entry.premises:
            lines.append(f"       from: {premise}")
    return "\n".join(lines)


def replay(verdict: Verdict) -> Tuple[str, ...]:
    """
    Re-check a verdict from scratch.

    Returns:
        Problems found; empty when every step replays
    """
    problems = [f"premise not established before use: {p}" for p in audit(verdict.derivation)]
    fresh = Classifier(InvariantEngine(strict=verdict.strict))
    again = Comparator(fresh).compare(verdict.a, verdict.b)
    if again.kind is not verdict.kind:
        problems.append(f"verdict changed on replay: {verdict.kind.value} -> {again.kind.value}")
    if (again.label_a, again.label_b) != (verdict.label_a, verdict.label_b):
        problems.append(f"labels changed on replay: {again.label_a}, {again.label_b}")
    reproduced = {entry.conclusion for entry in again.derivation}
    for entry in verdict.derivation:
        if entry.conclusion not in reproduced:
            problems.append(f"step not reproduced: [{entry.rule}] {entry.conclusion}")
    return tuple(problems)

