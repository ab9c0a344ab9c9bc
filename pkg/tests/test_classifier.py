import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.classifier.classifier import explain, replay, representative
from src.classifier.corpus import CLASS_MEMBERS, CLASSIFY_CASES
from src.classifier.labels import ClassLabel, LabelKind
from src.groups.expr import DirectProduct, Free, Int
from src.groups.grammar import to_text
from src.towers.protype import ONE_OF_THREE, ProType

WITH_REPRESENTATIVE = {name: members for name, members in CLASS_MEMBERS.items() if name != "C_FIN"}
MEMBERS = [(name, text) for name, texts in WITH_REPRESENTATIVE.items() for text in texts]
POWER_BASES = [
    "Z3", "Q8", "Z", "F2", "Z^2", "Z^3", "Sg2", "Sg-2", "F2 x Z", "BS12", "F2 x F2",
    "Z2 * Z3", "Z^2 * Z", "Amal(Z4, Z6, 2)",
]


@pytest.mark.parametrize("text,expected", CLASSIFY_CASES)
def test_corpus_labels(text, expected, parse_expr, classifier):
    assert str(classifier.label(parse_expr(text))) == expected


@pytest.mark.parametrize("text,expected", [
    ("Z^3", "C_Z3"),
    ("Z^2", "C_Z2"),
    ("F2 x Z", "C_F2xZ"),
])
def test_telescopic_trichotomy(text, expected, parse_expr, classifier, strict_comparator):
    assert str(classifier.label(parse_expr(text))) == expected
    assert str(strict_comparator.classifier.label(parse_expr(text))) == expected


def test_trichotomy_classes_are_pairwise_inequivalent(parse_expr, comparator):
    texts = ["Z^3", "Z^2", "F2 x Z"]
    for i, first in enumerate(texts):
        for second in texts[i + 1:]:
            verdict = comparator.compare(parse_expr(first), parse_expr(second))
            assert verdict.kind.value == "INEQUIVALENT"
            assert verdict.separator.invariant == "proType"


def test_free_factor_order_does_not_matter(parse_expr, classifier):
    assert classifier.label(parse_expr("Z * Z^2 * (F2 x Z)")) == \
        classifier.label(parse_expr("(F2 x Z) * Z * Z^2"))


def test_vertex_classes_ignore_multiplicity(parse_expr, classifier):
    label = classifier.label(parse_expr("Z^2 * Z^2 * (F2 x Z) * Sg2"))
    assert label.kind is LabelKind.INF
    assert len(label.members) == 2


def test_representatives():
    assert representative(ClassLabel.z()) == Int()
    assert representative(ClassLabel(LabelKind.F2xZ)) == DirectProduct((Free(2), Int()))
    assert representative(ClassLabel.infinite()) == Free(2)
    assert to_text(representative(ClassLabel.infinite([ClassLabel(LabelKind.Z2)]))) == "Z x Z * Z x Z"
    assert representative(ClassLabel.fin()) is None
    assert representative(ClassLabel.one_other(ONE_OF_THREE)) is None


def test_label_text_and_pinning():
    merged = ClassLabel.infinite([ClassLabel.fin(), ClassLabel.z(), ClassLabel(LabelKind.Z3)])
    assert str(merged) == "C_INF(∅)"
    assert merged.pinned
    both = ClassLabel.infinite([ClassLabel(LabelKind.Z2), ClassLabel(LabelKind.F2xZ)])
    assert str(both) == "C_INF({C_F2xZ, C_Z2})"
    assert not ClassLabel.infinite([ClassLabel.one_other(ONE_OF_THREE)]).pinned
    assert ClassLabel.from_pro_type(ProType.other("wild")).pinned
    assert str(ClassLabel.from_pro_type(ProType.unknown())) == "C_ONE_OTHER(proType unknown)"
    assert ClassLabel.from_pro_type(ProType.stable_free(3)).tag == "STABLE_FREE(3)"
    assert not ClassLabel.unknown().pinned


def test_label_validation():
    with pytest.raises(ValueError):
        ClassLabel(LabelKind.ONE_OTHER)
    with pytest.raises(ValueError):
        ClassLabel(LabelKind.Z2, members=frozenset({ClassLabel(LabelKind.Z2)}))
    with pytest.raises(ValueError):
        ClassLabel(LabelKind.INF, members=frozenset({ClassLabel.fin()}))


def test_counterexample_derivation(parse_expr, comparator):
    verdict = comparator.compare(parse_expr("Z2 * Z2 * Z2"), parse_expr("Z^3 * Z^3"))
    assert verdict.kind.value == "EQUIVALENT"
    rules = {entry.rule for entry in verdict.derivation}
    assert {"R-GRAPH", "R-MERGE", "R-FREE"} <= rules
    text = explain(verdict)
    assert text.splitlines()[0] == "Z2 * Z2 * Z2 vs Z x Z x Z * Z x Z x Z: EQUIVALENT"
    assert "[R-MERGE]" in text
    assert replay(verdict) == ()


@settings(max_examples=300, deadline=None)
@given(first=st.sampled_from(MEMBERS), second=st.sampled_from(MEMBERS))
def test_product_depends_only_on_factor_classes(first, second, parse_expr, classifier):
    (class_a, text_a), (class_b, text_b) = first, second
    label_a, label_b = classifier.label(parse_expr(text_a)), classifier.label(parse_expr(text_b))
    assert (str(label_a), str(label_b)) == (class_a, class_b)
    rep_a, rep_b = representative(label_a), representative(label_b)
    product = classifier.label(DirectProduct((parse_expr(text_a), parse_expr(text_b))))
    assert product == classifier.label(DirectProduct((rep_a, rep_b)))


@settings(max_examples=250, deadline=None)
@given(text=st.sampled_from(POWER_BASES), n=st.integers(min_value=2, max_value=5))
def test_free_powers_collapse_to_squares(text, n, parse_expr, classifier):
    power = " * ".join(f"({text})" for _ in range(n))
    square = f"({text}) * ({text})"
    assert classifier.label(parse_expr(power)) == classifier.label(parse_expr(square))
