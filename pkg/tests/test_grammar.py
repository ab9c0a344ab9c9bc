import pytest

from src.classifier.corpus import CLASSIFY_CASES, COMPARE_CASES
from src.errors import ExpressionSyntaxError, SemanticError
from src.groups.expr import (
    INF, AmalgamOverFinite, AnnotationSet, DirectProduct, FiniteCyclic, FiniteTable, Free, FreeProduct,
    GraphOfGroups, HNNOverFinite, Int, Opaque, Surface, Trivial, direct_product, free_product,
)
from src.groups.grammar import parse, parse_many, to_text
from src.groups.normalize import normalize
from src.invariants.types import EndCount


def test_products_nest_to_the_right():
    z2 = FiniteCyclic(2)
    assert parse("Z2 * Z2 * Z2") == FreeProduct((z2, FreeProduct((z2, z2))))
    assert parse("Z^3") == direct_product(Int(), Int(), Int())


def test_direct_product_binds_tighter_than_free_product():
    assert parse("Z * Z x Z") == FreeProduct((Int(), DirectProduct((Int(), Int()))))
    assert parse("(Z * Z) x Z") == DirectProduct((FreeProduct((Int(), Int())), Int()))


def test_times_sign_and_letter_x_agree():
    assert parse("F2 × Z") == parse("F2 x Z") == DirectProduct((Free(2), Int()))


@pytest.mark.parametrize("text,expected", [
    ("1", Trivial()),
    ("Z", Int()),
    ("Z7", FiniteCyclic(7)),
    ("F3", Free(3)),
    ("Sg2", Surface(2)),
    ("Sg-3", Surface(3, orientable=False)),
    ("HNN(Z3, 1)", HNNOverFinite(FiniteCyclic(3), 1)),
])
def test_atoms(text, expected):
    assert parse(text) == expected


def test_amalgam_side_indices_are_derived():
    assert parse("Amal(Z4, Z6, 2)") == AmalgamOverFinite(FiniteCyclic(4), FiniteCyclic(6), 2, 2, 3)
    assert parse("Amal(Z, Z, 1)") == AmalgamOverFinite(Int(), Int(), 1, INF, INF)


def test_amalgam_of_unknown_side_needs_explicit_indices():
    with pytest.raises(SemanticError):
        parse("Amal(Mystery, Z, 1)")
    explicit = parse("Amal(Mystery, Z, 1, inf, inf)")
    assert explicit.left == Opaque("Mystery")
    assert explicit.left_index == INF


def test_infinite_sides_have_infinite_index():
    assert parse("Amal(Z^2, Z^2, 1)") == AmalgamOverFinite(parse("Z^2"), parse("Z^2"), 1, INF, INF)
    assert parse("Amal(Z2 * Z3, Z4, 2)").left_index == INF
    one_ended = Opaque("Loose", AnnotationSet(ends=EndCount.ONE))
    with pytest.raises(SemanticError):
        AmalgamOverFinite(one_ended, FiniteCyclic(4), 2, 2, 2)
    assert AmalgamOverFinite(one_ended, FiniteCyclic(4), 2, INF, 2).left_index == INF


def test_graph_literal_accepts_quoted_keys():
    expected = GraphOfGroups((FiniteCyclic(2), FiniteCyclic(3)), ((0, 1, 1),))
    assert parse("Graph({vertices: [Z2, Z3], edges: [[0, 1, 1]]})") == expected
    assert parse('Graph({"vertices": [Z2, Z3], "edges": [[0, 1, 1]]})') == expected
    assert parse("Graph({vertices: [Z2], edges: []})") == GraphOfGroups((FiniteCyclic(2),), ())


def test_named_groups_resolve_through_the_registry(registry):
    bs = parse("BS12", registry)
    assert isinstance(bs, Opaque) and bs.annotations.one_relator
    assert isinstance(parse("Q8", registry), FiniteTable)
    assert parse("Mystery", registry) == Opaque("Mystery")
    assert parse("Mystery") == Opaque("Mystery")


def test_syntax_error_reports_position():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("Z $ Z")
    assert info.value.position == 2
    assert info.value.exit_code == 3

    with pytest.raises(ExpressionSyntaxError) as info:
        parse("Z ** Z")
    assert info.value.position == 3
    assert info.value.expected


def test_syntax_error_at_end_of_input():
    with pytest.raises(ExpressionSyntaxError):
        parse("Z *")
    with pytest.raises(ExpressionSyntaxError):
        parse("Amal(Z4, Z6)")


@pytest.mark.parametrize("text", [
    "Z1",
    "Z0",
    "F1",
    "F0",
    "Sg0",
    "Sg-1",
    "Z^0",
    "HNN(Z4, 3)",
    "QFN(Z6, 4)",
    "Amal(Z4, Z6, 3)",
    "Amal(Z4, Z6, 2, 2, 2)",
    "Amal(Z^2, Z^2, 1, 2, 2)",
    "Amal(Z x Z, Z4, 2, 2, 2)",
    "Amal(Z2 * Z3, Z4, 2, inf, 2)",
    "Graph({vertices: [Z2, Z3], edges: []})",
    "Graph({vertices: [Z], edges: []})",
    "Graph({vertices: [Z2], edges: [[0, 1, 1]]})",
])
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse(text)


def test_free_product_of_two_infinite_groups_cannot_be_a_graph_vertex():
    with pytest.raises(SemanticError):
        parse("Graph({vertices: [Z * Z], edges: []})")


def test_printing_parenthesizes_nested_products():
    expr = DirectProduct((FreeProduct((Int(), FiniteCyclic(2))), Int()))
    assert to_text(expr) == "(Z * Z2) x Z"
    assert to_text(free_product(Surface(2, orientable=False), Free(2))) == "Sg-2 * F2"


def _corpus_texts():
    texts = [text for text, _ in CLASSIFY_CASES]
    for first, second, _ in COMPARE_CASES:
        texts += [first, second]
    return sorted(set(texts))


@pytest.mark.parametrize("text", _corpus_texts())
def test_printed_form_parses_back(text, registry):
    expr = normalize(parse(text, registry))
    assert normalize(parse(to_text(expr), registry)) == expr


def test_parse_many(registry):
    assert parse_many(["Z", "BS12"], registry)[0] == Int()
