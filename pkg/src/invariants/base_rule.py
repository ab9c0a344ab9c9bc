"""
Base Invariant Rule
All invariant rule tables inherit from this class
"""

import logging
import threading
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable

from ..groups.expr import GroupExpr
from ..groups.normalize import normalize
from .trace import Fact, Premise, QUARANTINED, derive

logger = logging.getLogger(__name__)


class InvariantRule(ABC):
    """Base class for the rule tables computing one invariant each"""

    kind = "invariant"

    def __init__(self, name: str, strict: bool = False, engine=None):
        self.name = name
        self.strict = strict
        self.engine = engine
        self.logger = logging.getLogger(f"rule.{name}")
        self._memo: Dict[GroupExpr, Fact] = {}
        self._lock = threading.Lock()

    def evaluate(self, expr: GroupExpr) -> Fact:
        """
        Evaluate the invariant on an expression.

        Results are memoized by normalized expression; two threads may
        compute the same key, the first stored value wins.

        Args:
            expr: Any valid expression

        Returns:
            Fact carrying the value and its derivation
        """
        key = normalize(expr)
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached
        fact = self.derive(key)
        with self._lock:
            return self._memo.setdefault(key, fact)

    @abstractmethod
    def derive(self, expr: GroupExpr) -> Fact:
        """Apply the rule table to a normalized expression"""
        pass

    @abstractmethod
    def unknown(self) -> Any:
        pass

    def conclusion(self, expr: GroupExpr, value: Any) -> str:
        shown = getattr(value, "value", value)
        return f"{self.kind}({expr}) = {shown}"

    def allowed(self, rule: str) -> bool:
        """Quarantined axioms are disabled in strict mode"""
        return not (self.strict and rule in QUARANTINED)

    def fire(self, rule: str, expr: GroupExpr, value: Any, premises: Iterable[Premise] = ()) -> Fact:
        self.logger.debug(f"{rule}: {self.kind}({expr}) = {value}")
        return derive(rule, value, self.conclusion(expr, value), premises)

    def undetermined(self, expr: GroupExpr) -> Fact:
        value = self.unknown()
        return Fact(value, self.conclusion(expr, value))

    def clear(self):
        with self._lock:
            self._memo.clear()

    def __str__(self):
        return f"Rule table: {self.name}"
