from hypothesis import given, settings
from hypothesis import strategies as st

from src.groups.expr import (
    DirectProduct, FiniteCyclic, FiniteIndex, Free, FreeProduct, Int, QuotientByFiniteNormal,
    Surface, Trivial,
)
from src.groups.grammar import parse, to_text
from src.groups.normalize import normalize, serialize

ATOMS = st.sampled_from([
    Trivial(), FiniteCyclic(2), FiniteCyclic(3), Int(), Free(2), Surface(2),
    Surface(2, orientable=False),
])


def _extend(children):
    products = st.lists(children, min_size=2, max_size=3).map(tuple)
    return st.one_of(
        products.map(DirectProduct),
        products.map(FreeProduct),
        st.tuples(children, st.integers(min_value=1, max_value=3)).map(lambda p: FiniteIndex(*p)),
    )


EXPRESSIONS = st.recursive(ATOMS, _extend, max_leaves=8)


@settings(max_examples=200)
@given(EXPRESSIONS)
def test_normalize_is_idempotent(expr):
    once = normalize(expr)
    assert normalize(once) == once


@settings(max_examples=200)
@given(st.lists(EXPRESSIONS, min_size=2, max_size=4), st.randoms(use_true_random=False),
       st.sampled_from([DirectProduct, FreeProduct]))
def test_product_order_does_not_matter(factors, rng, kind):
    shuffled = list(factors)
    rng.shuffle(shuffled)
    assert normalize(kind(tuple(factors))) == normalize(kind(tuple(shuffled)))


@settings(max_examples=200)
@given(EXPRESSIONS)
def test_normal_form_survives_printing(expr):
    normal = normalize(expr)
    assert normalize(parse(to_text(normal))) == normal


def test_spines_are_flattened_and_sorted():
    assert normalize(parse("Z x (F2 x Z)")) == normalize(parse("(Z x Z) x F2"))
    assert isinstance(normalize(parse("Z2 * (Z3 * Z)")), FreeProduct)
    assert len(normalize(parse("Z2 * (Z3 * Z)")).factors) == 3


def test_trivial_factors_and_wrappers_are_dropped():
    assert normalize(parse("1 x Z")) == Int()
    assert normalize(parse("1 * 1")) == Trivial()
    assert normalize(FiniteIndex(Int(), 1)) == Int()
    assert normalize(QuotientByFiniteNormal(Free(2), 1)) == Free(2)


def test_amalgam_sides_are_ordered():
    assert normalize(parse("Amal(Z6, Z4, 2)")) == normalize(parse("Amal(Z4, Z6, 2)"))


def test_graph_edges_are_sorted():
    a = parse("Graph({vertices: [Z2, Z3, Z2], edges: [[2, 1, 1], [1, 0, 1]]})")
    b = parse("Graph({vertices: [Z2, Z3, Z2], edges: [[0, 1, 1], [1, 2, 1]]})")
    assert normalize(a) == normalize(b)


def test_serialize_is_the_printed_form():
    assert serialize(normalize(parse("Z x F2"))) == b"F2 x Z"
