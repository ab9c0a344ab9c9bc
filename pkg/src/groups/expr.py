"""
Group Expressions
Constructor algebra describing finitely presented groups
"""

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Optional, Tuple, Union

import networkx as nx
import numpy as np

from ..errors import AnnotationError, SemanticError
from ..invariants.types import EndCount
from ..towers.protype import ProKind, ProType

INF = math.inf
Index = Union[int, float]


@dataclass(frozen=True)
class AnnotationSet:
    """User-asserted facts about an Opaque group"""
    ends: Optional[EndCount] = None
    semistable: Optional[bool] = None
    pro_type: Optional[ProType] = None
    one_relator: bool = False
    cd_at_most_2: bool = False
    p3r: Optional[bool] = None

    def __post_init__(self):
        if self.semistable is False:
            if self.ends in (EndCount.ZERO, EndCount.TWO):
                raise AnnotationError(f"groups with {self.ends.value} ends are always semistable")
            if self.one_relator:
                raise AnnotationError("one-relator groups are semistable; semistable=false conflicts")
        if self.pro_type is not None and self.ends not in (None, EndCount.ONE):
            raise AnnotationError("proType is a 1-ended invariant but ends is not 1")
        if self.pro_type is not None and self.pro_type.telescopic and self.p3r is False:
            raise AnnotationError("telescopic pro-type implies P3R but p3r=false")
        if self.cd_at_most_2 and self.pro_type is not None and self.pro_type.kind is ProKind.TRIVIAL:
            raise AnnotationError("cdAtMost2 forces boundary number >= 2, conflicting with proType TRIVIAL")

    @property
    def effective_ends(self) -> EndCount:
        if self.ends is not None:
            return self.ends
        if self.pro_type is not None:
            return EndCount.ONE
        return EndCount.UNKNOWN

    @property
    def effective_semistable(self) -> Optional[bool]:
        if self.semistable is not None:
            return self.semistable
        if self.one_relator or self.ends in (EndCount.ZERO, EndCount.TWO):
            return True
        return None

    @property
    def is_empty(self) -> bool:
        return self == AnnotationSet()

    def missing(self) -> Tuple[str, ...]:
        """Annotation keys that would unblock classification"""
        needed = []
        if self.ends is None and self.pro_type is None:
            needed.append("ends")
        if self.effective_semistable is None:
            needed.append("semistable")
        if self.effective_ends in (EndCount.ONE, EndCount.UNKNOWN) and self.pro_type is None:
            needed.append("proType")
        return tuple(needed)


class GroupExpr:
    """Base class of all constructors; instances are immutable"""

    def children(self) -> Tuple["GroupExpr", ...]:
        return ()

    @property
    def size(self) -> int:
        """Structural node count"""
        return 1 + sum(child.size for child in self.children())

    def __str__(self) -> str:
        from .grammar import to_text
        return to_text(self)


@dataclass(frozen=True)
class Trivial(GroupExpr):
    pass


@dataclass(frozen=True)
class FiniteCyclic(GroupExpr):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise SemanticError(f"finite cyclic order must be >= 2, got Z{self.n}")


@dataclass(frozen=True)
class FiniteTable(GroupExpr):
    """A finite group given by its multiplication table over element labels"""
    name: str
    elements: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        order = len(self.elements)
        if order == 0 or len(set(self.elements)) != order:
            raise SemanticError(f"{self.name}: element labels must be nonempty and distinct")
        mult = np.array(self.table, dtype=np.int64)
        if mult.shape != (order, order):
            raise SemanticError(f"{self.name}: table must be {order}x{order}")
        if mult.min() < 0 or mult.max() >= order:
            raise SemanticError(f"{self.name}: table is not closed")
        rows = np.arange(order)
        identities = [e for e in range(order)
                      if np.array_equal(mult[e, :], rows) and np.array_equal(mult[:, e], rows)]
        if not identities:
            raise SemanticError(f"{self.name}: table has no identity")
        if not all((mult[a, :] == identities[0]).any() for a in range(order)):
            raise SemanticError(f"{self.name}: some element has no inverse")
        if not np.array_equal(mult[mult, :], mult[:, mult]):
            raise SemanticError(f"{self.name}: table is not associative")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        rows = list(range(self.order))
        return next(e for e in rows if list(self.table[e]) == rows)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)


@dataclass(frozen=True)
class Int(GroupExpr):
    pass


@dataclass(frozen=True)
class Free(GroupExpr):
    rank: int

    def __post_init__(self):
        if self.rank == 1:
            raise SemanticError("F1 is the integers: write Z instead")
        if self.rank < 2:
            raise SemanticError(f"free rank must be >= 2, got F{self.rank}")


@dataclass(frozen=True)
class Surface(GroupExpr):
    """Fundamental group of a closed aspherical surface"""
    genus: int
    orientable: bool = True

    def __post_init__(self):
        if self.genus < 1:
            raise SemanticError(f"surface genus must be >= 1, got {self.genus}")
        if not self.orientable and self.genus < 2:
            raise SemanticError("the projective plane has finite fundamental group: use Z2")


@dataclass(frozen=True)
class DirectProduct(GroupExpr):
    factors: Tuple[GroupExpr, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise SemanticError("a direct product needs at least two factors")

    def children(self):
        return self.factors


@dataclass(frozen=True)
class FreeProduct(GroupExpr):
    factors: Tuple[GroupExpr, ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise SemanticError("a free product needs at least two factors")

    def children(self):
        return self.factors


@dataclass(frozen=True)
class AmalgamOverFinite(GroupExpr):
    left: GroupExpr
    right: GroupExpr
    edge_order: int
    left_index: Index
    right_index: Index

    def __post_init__(self):
        if self.edge_order < 1:
            raise SemanticError("edge group order must be >= 1")
        for side, index in (("left", self.left_index), ("right", self.right_index)):
            if index != INF and (not isinstance(index, int) or index < 2):
                raise SemanticError(f"{side} index must be >= 2 or inf (edge group must be proper)")
            derived = side_index(getattr(self, side), self.edge_order)
            if derived is not None and derived != index:
                raise SemanticError(f"{side} index {index} disagrees with the side: expected {derived}")

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class HNNOverFinite(GroupExpr):
    base: GroupExpr
    edge_order: int

    def __post_init__(self):
        if self.edge_order < 1:
            raise SemanticError("edge group order must be >= 1")
        order = finite_order(self.base)
        if order is not None and order % self.edge_order:
            raise SemanticError(f"edge order {self.edge_order} does not divide |base| = {order}")

    def children(self):
        return (self.base,)


@dataclass(frozen=True)
class Extension(GroupExpr):
    kernel: GroupExpr
    quotient: GroupExpr

    def children(self):
        return (self.kernel, self.quotient)


@dataclass(frozen=True)
class FiniteIndex(GroupExpr):
    """Some group commensurable with base at the given index"""
    base: GroupExpr
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise SemanticError("index must be >= 1")

    def children(self):
        return (self.base,)


@dataclass(frozen=True)
class QuotientByFiniteNormal(GroupExpr):
    base: GroupExpr
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise SemanticError("normal subgroup order must be >= 1")
        base_order = finite_order(self.base)
        if base_order is not None and base_order % self.order:
            raise SemanticError(f"{self.order} does not divide |base| = {base_order}")

    def children(self):
        return (self.base,)


@dataclass(frozen=True)
class GraphOfGroups(GroupExpr):
    """Finite graph of groups with finite edge groups; vertices have at most one end"""
    vertices: Tuple[GroupExpr, ...]
    edges: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if not self.vertices:
            raise SemanticError("a graph of groups needs at least one vertex")
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(self.vertices)))
        for u, v, order in self.edges:
            if not (0 <= u < len(self.vertices) and 0 <= v < len(self.vertices)):
                raise SemanticError(f"edge ({u}, {v}) refers to a missing vertex")
            if order < 1:
                raise SemanticError("edge group order must be >= 1")
            graph.add_edge(u, v)
        if not nx.is_connected(graph):
            raise SemanticError("the underlying graph must be connected")

        from ..invariants.ends_rule import EndsRule
        ends = EndsRule()
        for position, vertex in enumerate(self.vertices):
            if ends.evaluate(vertex).value in (EndCount.TWO, EndCount.INF):
                raise SemanticError(f"vertex {position} has more than one end")

    def children(self):
        return self.vertices


@dataclass(frozen=True)
class Opaque(GroupExpr):
    name: str
    annotations: AnnotationSet = AnnotationSet()


def direct_product(*factors: GroupExpr) -> GroupExpr:
    """Right-nested binary direct product, as the parser builds it"""
    return reduce(lambda acc, f: DirectProduct((f, acc)), reversed(factors[:-1]), factors[-1])


def free_product(*factors: GroupExpr) -> GroupExpr:
    return reduce(lambda acc, f: FreeProduct((f, acc)), reversed(factors[:-1]), factors[-1])


def finite_order(expr: GroupExpr) -> Optional[int]:
    """Order of a finite group expression when the constructors determine it"""
    if isinstance(expr, Trivial):
        return 1
    if isinstance(expr, FiniteCyclic):
        return expr.n
    if isinstance(expr, FiniteTable):
        return expr.order
    if isinstance(expr, (DirectProduct, Extension)):
        orders = [finite_order(child) for child in expr.children()]
        return math.prod(orders) if None not in orders else None
    if isinstance(expr, QuotientByFiniteNormal):
        base = finite_order(expr.base)
        return base // expr.order if base is not None else None
    return None


def side_index(side: GroupExpr, edge_order: int) -> Optional[Index]:
    """Index of an edge subgroup of the given order in a side, when derivable"""
    order = finite_order(side)
    if order is not None:
        if order % edge_order:
            raise SemanticError(f"edge order {edge_order} does not divide side order {order}")
        return order // edge_order
    if isinstance(side, (Int, Free, Surface)):
        return INF
    from ..invariants.ends_rule import EndsRule
    # a finite edge group has infinite index in an infinite side
    if EndsRule().evaluate(side).value in (EndCount.ONE, EndCount.TWO, EndCount.INF):
        return INF
    return None
