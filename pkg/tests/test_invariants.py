import pytest

from src.classifier.corpus import BOUNDARY_CASES, CLASSIFY_CASES
from src.errors import NotKnownP3R, NotOneEnded
from src.groups.expr import AnnotationSet, FiniteIndex, Opaque
from src.invariants.engine import InvariantEngine
from src.invariants.trace import QUARANTINED, RULES, audit
from src.invariants.types import EndCount, H2Rank, PNumber, TriState
from src.towers.protype import ONE_OF_THREE, ProKind, ProType

LOOSE = Opaque("Loose", AnnotationSet(ends=EndCount.ONE, pro_type=ProType.pro_z()))
WILD = Opaque("Wild", AnnotationSet(ends=EndCount.ONE, semistable=False))


@pytest.mark.parametrize("text,ends", [
    ("1", EndCount.ZERO),
    ("Q8", EndCount.ZERO),
    ("Z", EndCount.TWO),
    ("Z x Z5", EndCount.TWO),
    ("Z2 * Z2", EndCount.TWO),
    ("Amal(Z4, Z4, 2)", EndCount.TWO),
    ("HNN(Z3, 3)", EndCount.TWO),
    ("Graph({vertices: [Z2, Z2], edges: [[0, 1, 1]]})", EndCount.TWO),
    ("Sg2", EndCount.ONE),
    ("Z^2", EndCount.ONE),
    ("FI(Z^2, 7)", EndCount.ONE),
    ("Ext(F2, Z)", EndCount.ONE),
    ("Graph({vertices: [Z^2, Z2], edges: [[0, 1, 2]]})", EndCount.ONE),
    ("F2", EndCount.INF),
    ("Z2 * Z3", EndCount.INF),
    ("Amal(Z4, Z6, 2)", EndCount.INF),
    ("HNN(Z3, 1)", EndCount.INF),
    ("Graph({vertices: [Z2, Z3], edges: [[0, 1, 1]]})", EndCount.INF),
    ("Graph({vertices: [Z^2, Z2], edges: [[0, 1, 1]]})", EndCount.INF),
    ("Mystery * Z * Z", EndCount.INF),
    ("Mystery", EndCount.UNKNOWN),
    ("Mystery * Z2", EndCount.UNKNOWN),
])
def test_ends(text, ends, parse_expr, invariants):
    assert invariants.ends(parse_expr(text)).value is ends


@pytest.mark.parametrize("text,pro_type", [
    ("Z^3", ProType.trivial()),
    ("Z^2", ProType.pro_z()),
    ("Sg2", ProType.pro_z()),
    ("Z x Z x Z2", ProType.pro_z()),
    ("F2 x Z", ProType.telescopic_inf()),
    ("Ext(F2, Z)", ProType.telescopic_inf()),
    ("BS12", ProType.telescopic_inf()),
    ("F2 x F2", ProType.other(ONE_OF_THREE)),
])
def test_pro_types(text, pro_type, parse_expr, invariants):
    assert invariants.pro_type(parse_expr(text)).value == pro_type


def test_stacking_axiom_is_quarantined(parse_expr, invariants, strict_invariants):
    z4 = parse_expr("Z^4")
    loose = invariants.pro_type(z4)
    assert loose.value == ProType.trivial()
    assert "R-SCI-STACK" in {entry.rule for entry in loose.trace}
    assert strict_invariants.pro_type(z4).value == ProType.other(ONE_OF_THREE)


def test_graph_semistability_axiom_is_quarantined(parse_expr, invariants, strict_invariants):
    expr = parse_expr("Z2 * Z3")
    assert invariants.semistable(expr).value is TriState.TRUE
    assert strict_invariants.semistable(expr).value is TriState.UNKNOWN
    assert strict_invariants.semistable(parse_expr("F2")).value is TriState.TRUE
    assert strict_invariants.semistable(parse_expr("Z2 * Z2")).value is TriState.TRUE


def test_semistability_false_only_from_annotations(invariants):
    assert invariants.semistable(WILD).value is TriState.FALSE
    assert invariants.semistable(Opaque("Mystery")).value is TriState.UNKNOWN


def test_pro_type_needs_one_end(parse_expr, invariants):
    with pytest.raises(NotOneEnded):
        invariants.pro_type(parse_expr("F2"))
    with pytest.raises(NotOneEnded):
        invariants.p_number(parse_expr("Z"))


def test_boundary_number_needs_p3r(invariants):
    with pytest.raises(NotKnownP3R):
        invariants.p_number(Opaque("Plain", AnnotationSet(ends=EndCount.ONE)))


@pytest.mark.parametrize("text,p_number,h2rank", BOUNDARY_CASES)
def test_boundary_numbers(text, p_number, h2rank, parse_expr, invariants):
    expr = parse_expr(text)
    number = invariants.p_number(expr)
    assert number.value.display == p_number
    assert invariants.h2rank(expr, number).value.value == h2rank


def test_annotated_pro_type_gives_the_boundary_number(invariants):
    report = invariants.report(LOOSE)
    assert report.p3r is TriState.TRUE
    assert report.p_number is PNumber.P2
    assert report.h2rank is H2Rank.ONE
    assert report.semistable is TriState.UNKNOWN


def test_report_fields(parse_expr, invariants):
    data = invariants.report(parse_expr("Z^2")).to_dict()
    assert data["ends"] == "ONE"
    assert data["semistable"] == "TRUE"
    assert data["proType"] == "PRO_Z"
    assert data["pNumber"] == "2"
    assert data["h2rank"] == "1"
    assert data["p3r"] == "TRUE"
    assert data["proStable"] == "TRUE"
    assert data["n"] == 2
    assert data["trace"]

    telescopic = invariants.report(parse_expr("F2 x Z"))
    assert telescopic.p_number is PNumber.PINF
    assert telescopic.pro_stable is TriState.FALSE


def test_report_degrades_instead_of_raising(parse_expr, invariants):
    report = invariants.report(parse_expr("F2"))
    assert report.ends is EndCount.INF
    assert report.pro_type.kind is ProKind.UNKNOWN
    assert report.p_number is PNumber.UNKNOWN
    assert report.h2rank is H2Rank.UNKNOWN
    assert report.pro_stable is TriState.UNKNOWN


def _invariant_fields(report):
    data = report.to_dict()
    del data["trace"]
    return data


@pytest.mark.parametrize("text", ["Z", "F2", "Z^2", "Z^3", "Sg2", "F2 x Z", "Z2 * Z3"])
@pytest.mark.parametrize("index", [2, 3, 4, 5])
def test_finite_index_keeps_every_invariant(text, index, parse_expr, invariants):
    expr = parse_expr(text)
    assert _invariant_fields(invariants.report(FiniteIndex(expr, index))) == \
        _invariant_fields(invariants.report(expr))


@pytest.mark.parametrize("text", [text for text, _ in CLASSIFY_CASES])
def test_traces_are_grounded(text, parse_expr, invariants, strict_invariants):
    expr = parse_expr(text)
    for engine in (invariants, strict_invariants):
        trace = engine.report(expr).trace
        assert audit(trace) == ()
        assert all(entry.rule in RULES and entry.cite == RULES[entry.rule] for entry in trace)


@pytest.mark.parametrize("text", [text for text, _ in CLASSIFY_CASES])
def test_strict_traces_avoid_quarantined_rules(text, parse_expr, strict_invariants):
    trace = strict_invariants.report(parse_expr(text)).trace
    assert not {entry.rule for entry in trace} & QUARANTINED


def test_clear_forgets_memoized_facts(parse_expr):
    engine = InvariantEngine()
    expr = parse_expr("Z^2")
    first = engine.ends(expr)
    engine.clear()
    assert engine.ends(expr) == first
    assert engine.rules["ends"]._memo


@pytest.mark.parametrize("text,value", [
    ("0", EndCount.ZERO),
    ("1", EndCount.ONE),
    ("2", EndCount.TWO),
    ("inf", EndCount.INF),
    ("INF", EndCount.INF),
    ("unknown", EndCount.UNKNOWN),
])
def test_end_count_spellings(text, value):
    assert EndCount.from_text(text) is value


def test_pro_type_text():
    assert ProType.parse("STABLE_FREE(1)") == ProType.pro_z()
    assert ProType.parse("STABLE_FREE(0)") == ProType.trivial()
    assert str(ProType.parse("STABLE_FREE(3)")) == "STABLE_FREE(3)"
    assert str(ProType.other(ONE_OF_THREE)) == "OTHER(one-of-three)"
    assert not ProType.other(ONE_OF_THREE).pinned
    assert ProType.other("wild").pinned
    with pytest.raises(ValueError):
        ProType.parse("PRO_Z(2)")
    with pytest.raises(ValueError):
        ProType(ProKind.OTHER)
