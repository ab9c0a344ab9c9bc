"""
Expression Grammar
Parses and prints the textual form of group expressions
"""

import logging
from typing import List

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from ..errors import ExpressionSyntaxError, InputError, SemanticError
from .expr import (
    INF, AmalgamOverFinite, DirectProduct, Extension, FiniteCyclic, FiniteIndex,
    FiniteTable, Free, FreeProduct, GraphOfGroups, GroupExpr, HNNOverFinite, Int,
    Opaque, QuotientByFiniteNormal, Surface, Trivial, direct_product, free_product,
    side_index,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
start: expr

?expr: prod
     | prod ("*" prod)+                                       -> free_product

?prod: power
     | power (_TIMES power)+                                  -> direct_product

?power: atom
      | atom "^" INT                                          -> power

?atom: "(" expr ")"
     | "1"                                                    -> trivial
     | INTEGERS                                               -> integers
     | CYCLIC                                                 -> cyclic
     | FREE                                                   -> free
     | SURFACE                                                -> surface
     | "Amal" "(" expr "," expr "," INT ("," index "," index)? ")"  -> amalgam
     | "HNN" "(" expr "," INT ")"                             -> hnn
     | "Ext" "(" expr "," expr ")"                            -> extension
     | "FI" "(" expr "," INT ")"                              -> finite_index
     | "QFN" "(" expr "," INT ")"                             -> finite_quotient
     | "Graph" "(" "{" vertex_list "," edge_list "}" ")"      -> graph
     | NAME                                                   -> named

vertex_list: _VERTICES ":" "[" expr ("," expr)* "]"
edge_list: _EDGES ":" "[" (edge ("," edge)*)? "]"
edge: "[" INT "," INT "," INT "]"
index: INT | INF

_TIMES: "x" | "×"
INF: "inf"
_VERTICES: /"?vertices"?/
_EDGES: /"?edges"?/
INTEGERS.3: /Z(?![A-Za-z0-9_])/
CYCLIC.3: /Z[0-9]+(?![A-Za-z0-9_])/
FREE.3: /F[0-9]+(?![A-Za-z0-9_])/
SURFACE.3: /Sg-?[0-9]+(?![A-Za-z0-9_])/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.INT
%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser="lalr", lexer="contextual")


@v_args(inline=True)
class _ExprBuilder(Transformer):
    """Turns parse trees into GroupExpr values"""

    def __init__(self, registry=None):
        super().__init__()
        self.registry = registry

    def start(self, expr):
        return expr

    def free_product(self, *factors):
        return free_product(*factors)

    def direct_product(self, *factors):
        return direct_product(*factors)

    def power(self, atom, exponent):
        k = int(exponent)
        if k < 1:
            raise SemanticError(f"exponent must be >= 1, got ^{k}")
        return direct_product(*([atom] * k))

    def trivial(self):
        return Trivial()

    def integers(self, _token):
        return Int()

    def cyclic(self, token):
        return FiniteCyclic(int(token[1:]))

    def free(self, token):
        return Free(int(token[1:]))

    def surface(self, token):
        body = token[2:]
        if body.startswith("-"):
            return Surface(int(body[1:]), orientable=False)
        return Surface(int(body))

    def index(self, token):
        return INF if token.type == "INF" else int(token)

    def amalgam(self, left, right, edge, *indices):
        edge_order = int(edge)
        if indices:
            left_index, right_index = indices
        else:
            left_index = side_index(left, edge_order)
            right_index = side_index(right, edge_order)
            if left_index is None or right_index is None:
                raise SemanticError("side indices cannot be derived here: write Amal(A, B, n, i, j)")
        return AmalgamOverFinite(left, right, edge_order, left_index, right_index)

    def hnn(self, base, edge):
        return HNNOverFinite(base, int(edge))

    def extension(self, kernel, quotient):
        return Extension(kernel, quotient)

    def finite_index(self, base, index):
        return FiniteIndex(base, int(index))

    def finite_quotient(self, base, order):
        return QuotientByFiniteNormal(base, int(order))

    def vertex_list(self, *vertices):
        return tuple(vertices)

    def edge(self, u, v, order):
        return (int(u), int(v), int(order))

    def edge_list(self, *edges):
        return tuple(edges)

    def graph(self, vertices, edges):
        return GraphOfGroups(vertices, edges)

    def named(self, token):
        name = str(token)
        if self.registry is not None:
            return self.registry.lookup(name)
        return Opaque(name)


def parse(text: str, registry=None) -> GroupExpr:
    """
    Parse an expression.

    Args:
        text: Expression text, e.g. "Z2 * Z2 * Z2" or "F2 x Z"
        registry: GroupRegistry resolving named groups (Opaque or finite tables)

    Returns:
        The expression tree; products come out right-nested and binary
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as e:
        position = getattr(e, "pos_in_stream", None)
        if position is None:
            position = len(text)
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or ()
        raise ExpressionSyntaxError(position, expected, text) from None
    try:
        return _ExprBuilder(registry).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, InputError):
            raise e.orig_exc from None
        raise


def _index_text(index) -> str:
    return "inf" if index == INF else str(index)


def _wrap(expr: GroupExpr, inside: type) -> str:
    text = to_text(expr)
    if isinstance(expr, FreeProduct) or (inside is DirectProduct and isinstance(expr, DirectProduct)):
        return f"({text})"
    return text


def to_text(expr: GroupExpr) -> str:
    """Print an expression in the grammar's syntax"""
    if isinstance(expr, Trivial):
        return "1"
    if isinstance(expr, FiniteCyclic):
        return f"Z{expr.n}"
    if isinstance(expr, FiniteTable):
        return expr.name
    if isinstance(expr, Int):
        return "Z"
    if isinstance(expr, Free):
        return f"F{expr.rank}"
    if isinstance(expr, Surface):
        return f"Sg{expr.genus}" if expr.orientable else f"Sg-{expr.genus}"
    if isinstance(expr, DirectProduct):
        return " x ".join(_wrap(f, DirectProduct) for f in expr.factors)
    if isinstance(expr, FreeProduct):
        return " * ".join(_wrap(f, FreeProduct) for f in expr.factors)
    if isinstance(expr, AmalgamOverFinite):
        return (f"Amal({to_text(expr.left)}, {to_text(expr.right)}, {expr.edge_order}, "
                f"{_index_text(expr.left_index)}, {_index_text(expr.right_index)})")
    if isinstance(expr, HNNOverFinite):
        return f"HNN({to_text(expr.base)}, {expr.edge_order})"
    if isinstance(expr, Extension):
        return f"Ext({to_text(expr.kernel)}, {to_text(expr.quotient)})"
    if isinstance(expr, FiniteIndex):
        return f"FI({to_text(expr.base)}, {expr.index})"
    if isinstance(expr, QuotientByFiniteNormal):
        return f"QFN({to_text(expr.base)}, {expr.order})"
    if isinstance(expr, GraphOfGroups):
        vertices = ", ".join(to_text(v) for v in expr.vertices)
        edges = ", ".join(f"[{u}, {v}, {order}]" for u, v, order in expr.edges)
        return f"Graph({{vertices: [{vertices}], edges: [{edges}]}})"
    if isinstance(expr, Opaque):
        return expr.name
    raise TypeError(f"not a group expression: {expr!r}")


def parse_many(texts: List[str], registry=None) -> List[GroupExpr]:
    return [parse(text, registry) for text in texts]
