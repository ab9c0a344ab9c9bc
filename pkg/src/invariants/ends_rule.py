"""
Ends Rule Table
Number of ends of a group expression, by constructor
"""

from fractions import Fraction
from typing import List, Optional

import networkx as nx

from ..groups.expr import (
    AmalgamOverFinite, DirectProduct, Extension, FiniteCyclic, FiniteIndex, FiniteTable,
    Free, FreeProduct, GraphOfGroups, GroupExpr, HNNOverFinite, Int, Opaque,
    QuotientByFiniteNormal, Surface, Trivial, finite_order,
)
from .base_rule import InvariantRule
from .trace import Fact, annotation, constructor
from .types import EndCount


class EndsRule(InvariantRule):
    """Ends: ZERO for finite groups, else 1, 2 or infinitely many"""

    kind = "ends"

    def __init__(self, strict: bool = False, engine=None):
        super().__init__("ends", strict, engine)

    def unknown(self):
        return EndCount.UNKNOWN

    def derive(self, expr: GroupExpr) -> Fact:
        if isinstance(expr, (Trivial, FiniteCyclic, FiniteTable)):
            return self.fire("R-FIN", expr, EndCount.ZERO, [constructor(str(expr))])
        if isinstance(expr, Int):
            return self.fire("R-ENDS-Z", expr, EndCount.TWO, [constructor(str(expr))])
        if isinstance(expr, Free):
            return self.fire("R-ENDS-FREE", expr, EndCount.INF, [constructor(str(expr))])
        if isinstance(expr, Surface):
            return self.fire("R-ENDS-SURF", expr, EndCount.ONE, [constructor(str(expr))])
        if isinstance(expr, DirectProduct):
            return self._product(expr, list(expr.factors))
        if isinstance(expr, Extension):
            return self._product(expr, [expr.kernel, expr.quotient])
        if isinstance(expr, FreeProduct):
            return self._free_product(expr)
        if isinstance(expr, AmalgamOverFinite):
            value = EndCount.TWO if expr.left_index == 2 and expr.right_index == 2 else EndCount.INF
            return self.fire("R-ENDS-AMAL", expr, value, [constructor(str(expr))])
        if isinstance(expr, HNNOverFinite):
            return self._hnn(expr)
        if isinstance(expr, (FiniteIndex, QuotientByFiniteNormal)):
            base = self.evaluate(expr.base)
            if not base.value.determined:
                return self.undetermined(expr)
            return self.fire("R-QI-INHERIT", expr, base.value, [base, constructor(str(expr))])
        if isinstance(expr, GraphOfGroups):
            return self._graph(expr)
        if isinstance(expr, Opaque):
            value = expr.annotations.effective_ends
            if not value.determined:
                return self.undetermined(expr)
            key, shown = ("ends", expr.annotations.ends) if expr.annotations.ends else ("proType", expr.annotations.pro_type)
            return self.fire("R-ANNOT", expr, value, [annotation(expr.name, key, getattr(shown, "value", shown))])
        return self.undetermined(expr)

    def _product(self, expr: GroupExpr, parts: List[GroupExpr]) -> Fact:
        facts = [self.evaluate(p) for p in parts]
        infinite = [f for f in facts if f.value.determined and f.value is not EndCount.ZERO]
        if len(infinite) >= 2:
            return self.fire("R-ENDS-PROD", expr, EndCount.ONE, infinite[:2])
        if any(not f.value.determined for f in facts):
            return self.undetermined(expr)
        if not infinite:
            return self.fire("R-FIN", expr, EndCount.ZERO, facts)
        return self.fire("R-ENDS-FINITE-PART", expr, infinite[0].value, facts)

    def _free_product(self, expr: FreeProduct) -> Fact:
        facts = [self.evaluate(f) for f in expr.factors]
        nontrivial, maybe_trivial = [], []
        for factor, fact in zip(expr.factors, facts):
            order = finite_order(factor)
            if order == 1:
                continue
            if fact.value in (EndCount.ONE, EndCount.TWO, EndCount.INF) or order is not None:
                nontrivial.append((order, fact))
            else:
                maybe_trivial.append(fact)

        involutions = [order for order, _ in nontrivial if order == 2]
        dihedral = len(nontrivial) == 2 and len(involutions) == 2
        if maybe_trivial:
            if len(nontrivial) >= 3 or (len(nontrivial) == 2 and not dihedral):
                return self.fire("R-ENDS-FREEPROD", expr, EndCount.INF, [f for _, f in nontrivial])
            return self.undetermined(expr)
        if not nontrivial:
            return self.fire("R-FIN", expr, EndCount.ZERO, facts)
        if len(nontrivial) == 1:
            return self.fire("R-ENDS-FINITE-PART", expr, nontrivial[0][1].value, facts)
        value = EndCount.TWO if dihedral else EndCount.INF
        return self.fire("R-ENDS-FREEPROD", expr, value, facts)

    def _hnn(self, expr: HNNOverFinite) -> Fact:
        base = self.evaluate(expr.base)
        order = finite_order(expr.base)
        if order is not None and order == expr.edge_order:
            return self.fire("R-ENDS-HNN", expr, EndCount.TWO, [base, constructor(str(expr))])
        if order is not None or base.value in (EndCount.ONE, EndCount.TWO, EndCount.INF):
            return self.fire("R-ENDS-HNN", expr, EndCount.INF, [base, constructor(str(expr))])
        return self.undetermined(expr)

    def _graph(self, expr: GraphOfGroups) -> Fact:
        facts = [self.evaluate(v) for v in expr.vertices]
        if any(not f.value.determined for f in facts):
            return self.undetermined(expr)
        orders = [finite_order(v) for v in expr.vertices]
        premises = facts + [constructor(str(expr))]

        if all(f.value is EndCount.ZERO for f in facts) and None not in orders:
            chi = sum(Fraction(1, n) for n in orders) - sum(Fraction(1, e) for _, _, e in expr.edges)
            value = EndCount.ZERO if chi > 0 else EndCount.TWO if chi == 0 else EndCount.INF
            return self.fire("R-ENDS-EULER", expr, value, premises)

        collapsed = self._collapse(expr, facts, orders)
        if collapsed is None:
            return self.undetermined(expr)
        if collapsed.number_of_edges() > 0:
            return self.fire("R-ENDS-GRAPH", expr, EndCount.INF, premises)
        (remaining,) = collapsed.nodes
        return self.fire("R-ENDS-GRAPH", expr, collapsed.nodes[remaining]["ends"], premises)

    @staticmethod
    def _collapse(expr: GraphOfGroups, facts: List[Fact], orders: List[Optional[int]]) -> Optional[nx.MultiGraph]:
        """Contract edges whose group is a whole finite endpoint vertex group"""
        graph = nx.MultiGraph()
        for i, (fact, order) in enumerate(zip(facts, orders)):
            if fact.value is EndCount.ZERO and order is None:
                return None
            graph.add_node(i, ends=fact.value, order=order)
        for u, v, order in expr.edges:
            graph.add_edge(u, v, order=order)

        changed = True
        while changed:
            changed = False
            for u, v, key, data in graph.edges(keys=True, data=True):
                if u == v:
                    continue
                if graph.nodes[v]["order"] == data["order"]:
                    keep, drop = u, v
                elif graph.nodes[u]["order"] == data["order"]:
                    keep, drop = v, u
                else:
                    continue
                attributes = {"ends": graph.nodes[keep]["ends"], "order": graph.nodes[keep]["order"]}
                graph.remove_edge(u, v, key)
                graph = nx.contracted_nodes(graph, keep, drop, self_loops=True)
                nx.set_node_attributes(graph, {keep: attributes})
                changed = True
                break
        return graph
