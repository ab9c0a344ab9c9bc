import pytest

from src.classifier.classifier import VerdictKind, replay
from src.classifier.corpus import COMPARE_CASES
from src.groups.expr import AnnotationSet, Opaque
from src.invariants.trace import audit
from src.invariants.types import EndCount
from src.towers.protype import ProType

LOOSE = Opaque("Loose", AnnotationSet(ends=EndCount.ONE, pro_type=ProType.pro_z()))
WILD = Opaque("Wild", AnnotationSet(ends=EndCount.ONE, semistable=False))


@pytest.mark.parametrize("first,second,expected", COMPARE_CASES)
def test_corpus_verdicts(first, second, expected, parse_expr, comparator):
    a, b = parse_expr(first), parse_expr(second)
    assert comparator.compare(a, b).kind.value == expected
    assert comparator.compare(b, a).kind.value == expected


@pytest.mark.parametrize("first,second,expected", COMPARE_CASES)
def test_verdicts_are_sound(first, second, expected, parse_expr, comparator):
    a, b = parse_expr(first), parse_expr(second)
    verdict = comparator.compare(a, b)
    assert audit(verdict.derivation) == ()
    if verdict.kind is VerdictKind.EQUIVALENT:
        fact_a, fact_b = comparator.classifier.evaluate(a), comparator.classifier.evaluate(b)
        assert comparator.separate(a, b, fact_a, fact_b) is None
        assert verdict.derivation
    if verdict.kind is VerdictKind.INEQUIVALENT:
        assert verdict.separator is not None


@pytest.mark.parametrize("first,second,expected", COMPARE_CASES)
def test_strict_mode_keeps_or_weakens_verdicts(first, second, expected, parse_expr, strict_comparator):
    verdict = strict_comparator.compare(parse_expr(first), parse_expr(second))
    assert verdict.kind.value in (expected, "UNKNOWN")
    assert verdict.strict


def test_strict_mode_cannot_stack_products(parse_expr, comparator, strict_comparator):
    a, b = parse_expr("Z^3"), parse_expr("Z^4")
    assert comparator.compare(a, b).kind is VerdictKind.EQUIVALENT
    assert strict_comparator.compare(a, b).kind is VerdictKind.UNKNOWN


@pytest.mark.parametrize("first,second,invariant,values", [
    ("Z", "Z^2", "ends", ("TWO", "ONE")),
    ("Z^2", "F2 x Z", "proType", ("PRO_Z", "TELESCOPIC_INF")),
    ("Z^3", "Z^2", "proType", ("TRIVIAL", "PRO_Z")),
])
def test_separators(first, second, invariant, values, parse_expr, comparator):
    verdict = comparator.compare(parse_expr(first), parse_expr(second))
    assert verdict.separator.invariant == invariant
    assert (verdict.separator.value_a, verdict.separator.value_b) == values
    assert verdict.to_dict()["separator"] == {"invariant": invariant, "a": values[0], "b": values[1]}


def test_semistability_separates(parse_expr, comparator):
    verdict = comparator.compare(WILD, parse_expr("Z^2"))
    assert verdict.kind is VerdictKind.INEQUIVALENT
    assert verdict.separator.invariant == "semistable"
    assert (verdict.separator.value_a, verdict.separator.value_b) == ("FALSE", "TRUE")
    assert str(verdict.label_a) == "C_ONE_OTHER(non-semistable)"


def test_cohomology_rank_separates(parse_expr, comparator):
    verdict = comparator.compare(LOOSE, parse_expr("Z^3"))
    assert verdict.kind is VerdictKind.INEQUIVALENT
    assert verdict.separator.invariant == "h2rank"
    assert (verdict.separator.value_a, verdict.separator.value_b) == ("1", "0")


def test_missing_annotations_are_reported(parse_expr, comparator):
    verdict = comparator.compare(parse_expr("Mystery"), parse_expr("Z"))
    assert verdict.kind is VerdictKind.UNKNOWN
    assert verdict.reason == "missing annotations"
    assert verdict.missing == ("Mystery: ends, semistable, proType",)
    assert verdict.to_dict()["missing"] == ["Mystery: ends, semistable, proType"]


def test_unknown_reasons(parse_expr, comparator):
    vague = comparator.compare(parse_expr("F2 x F2"), parse_expr("Ext(F2, F2)"))
    assert vague.reason == "C_ONE_OTHER(one-of-three) does not name a single class"
    differing = comparator.compare(parse_expr("Z^2 * Z^2"), parse_expr("(F2 x Z) * (F2 x Z)"))
    assert differing.reason.endswith("differing vertex classes do not prove inequivalence")


def test_verdict_payload(parse_expr, comparator):
    data = comparator.compare(parse_expr("F2"), parse_expr("F3")).to_dict()
    assert data["verdict"] == "EQUIVALENT"
    assert data["label_a"] == data["label_b"] == "C_INF(∅)"
    assert "separator" not in data
    assert {"rule", "cite", "premises", "conclusion"} == set(data["derivation"][0])


@pytest.mark.parametrize("first,second", [
    ("Z^2", "Sg2"),
    ("Z^2 * Z", "Z^2 * Z^2"),
    ("Z", "Z^2"),
    ("F2 x F2", "Z^3"),
])
def test_replay(first, second, parse_expr, comparator):
    assert replay(comparator.compare(parse_expr(first), parse_expr(second))) == ()


def test_amalgam_of_one_ended_sides_is_not_two_ended(parse_expr, comparator, invariants):
    amalgam = parse_expr("Amal(Z^2, Z^2, 1)")
    assert invariants.ends(amalgam).value is EndCount.INF
    verdict = comparator.compare(amalgam, parse_expr("Z"))
    assert verdict.kind is VerdictKind.INEQUIVALENT
    assert verdict.separator.invariant == "ends"
