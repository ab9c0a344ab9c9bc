import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import tower_path
from src.errors import NotStandard, RankMismatch, WindowExhausted
from src.free.folding import fold
from src.free.words import FreeHom, FreeWord, reduce
from src.towers.analysis import (
    MLVerdict, TrivialityVerdict, mittag_leffler, pro_iso_telescopic, pro_trivial, reindex,
    stable_ranks, strictly_descending, telescopic_type,
)
from src.towers.protype import ProType
from src.towers.tower import ExplicitTower, PeriodicTower, StandardTelescopic
from src.towers.tower_file import load


def test_dyadic_tower_fails_with_a_descending_chain():
    result = mittag_leffler(load(tower_path("dyadic.twr")))
    assert result.verdict is MLVerdict.FAILS
    assert result.fail_stage == 0
    assert result.chain == tuple(fold(1, [FreeWord.parse(1, w)]) for w in ("a", "aa", "aaaa"))
    assert strictly_descending(result.chain)
    assert result.to_dict()["chain"] == [["a"], ["a a"], ["a a a a"]]


def test_dyadic_tower_is_not_pro_trivial():
    result = pro_trivial(load(tower_path("dyadic.twr")))
    assert result.verdict is TrivialityVerdict.NO
    assert result.stage == 0
    assert str(result.witness) == "a a a a"
    assert result.reason == "images descend strictly but never vanish"


def test_constant_tower_is_stable_at_once():
    tower = load(tower_path("constant_f2.twr"))
    result = mittag_leffler(tower, depth=4)
    assert result.verdict is MLVerdict.HOLDS_STABLE
    assert all(info.lag == 0 and info.image.is_full and info.certified for info in result.stage_map.values())
    assert stable_ranks(result) == [2] * 5
    trivial = pro_trivial(tower, depth=4)
    assert trivial.verdict is TrivialityVerdict.NO
    assert trivial.stage == 0


def test_killing_tower_within_its_window():
    tower = load(tower_path("killing_f2.twr"))
    result = mittag_leffler(tower, depth=3)
    assert result.verdict is MLVerdict.INCONCLUSIVE
    assert result.reason == "images at stage 2 still descend at stage 3"
    steady = ExplicitTower((2, 2, 2), (FreeHom.identity(2), FreeHom.identity(2)))
    evidence = mittag_leffler(steady, depth=2)
    assert evidence.verdict is MLVerdict.HOLDS_STABLE
    assert not any(info.certified for info in evidence.stage_map.values())

    trivial = pro_trivial(tower, depth=3)
    assert trivial.verdict is TrivialityVerdict.YES
    assert trivial.lags == {0: 1, 1: 1, 2: 1}
    assert trivial.to_dict() == {"verdict": "YES", "lags": {"0": 1, "1": 1, "2": 1}}


def test_explicit_tower_beyond_its_window():
    tower = load(tower_path("killing_f2.twr"))
    with pytest.raises(WindowExhausted):
        mittag_leffler(tower, depth=16)
    with pytest.raises(WindowExhausted):
        pro_trivial(tower, depth=4)
    with pytest.raises(WindowExhausted):
        tower.reindex([0, 5])


@pytest.mark.parametrize("name,expected", [
    ("telescopic_111.twr", ProType.telescopic_inf()),
    ("telescopic_50.twr", ProType.telescopic_inf()),
    ("telescopic_100.twr", ProType.pro_z()),
    ("telescopic_000.twr", ProType.trivial()),
])
def test_telescopic_types(name, expected):
    assert telescopic_type(load(tower_path(name))) == expected


def test_telescopic_pro_isomorphism():
    assert pro_iso_telescopic(load(tower_path("telescopic_111.twr")), load(tower_path("telescopic_50.twr")))
    assert not pro_iso_telescopic(load(tower_path("telescopic_111.twr")), load(tower_path("telescopic_100.twr")))


def test_telescopic_type_needs_a_standard_tower():
    with pytest.raises(NotStandard):
        telescopic_type(load(tower_path("dyadic.twr")))


def test_telescopic_towers_are_mittag_leffler():
    tower = StandardTelescopic.repeat_last((1, 2))
    assert tower.rank(3) == 7
    assert mittag_leffler(tower, depth=3).verdict is MLVerdict.HOLDS_STABLE
    assert pro_trivial(StandardTelescopic.zero_after((0,)), depth=3).verdict is TrivialityVerdict.YES
    assert pro_trivial(StandardTelescopic.zero_after((0, 1)), depth=3).stage == 1
    assert StandardTelescopic.zero_after((2, 3)).final_rank == 5


def test_reindex_composes_bonds():
    tower = load(tower_path("dyadic.twr"))
    every_other = reindex(tower, [0, 2, 4])
    assert every_other.ranks == (1, 1, 1)
    assert str(every_other.bonds[0]) == "a->a a a a"
    with pytest.raises(ValueError):
        reindex(tower, [2, 1])
    with pytest.raises(ValueError):
        reindex(tower, [])


def test_tower_validation():
    f = FreeHom.from_texts(2, 1, ["a", "1"])
    with pytest.raises(RankMismatch):
        ExplicitTower((1, 2), (FreeHom.identity(2),))
    with pytest.raises(RankMismatch):
        ExplicitTower((1, 2), ())
    with pytest.raises(RankMismatch):
        PeriodicTower((1,), (), (2,), (f,))
    with pytest.raises(ValueError):
        StandardTelescopic((1, -1))


def test_square_of_the_period_gives_the_same_answer():
    kill_b = FreeHom.from_texts(2, 2, ["a", "1"])
    once = PeriodicTower((2,), (), (2,), (kill_b,))
    twice = PeriodicTower((2,), (), (2, 2), (kill_b, kill_b))
    first, second = mittag_leffler(once, depth=6), mittag_leffler(twice, depth=6)
    assert first.verdict is second.verdict is MLVerdict.HOLDS_STABLE
    assert stable_ranks(first) == stable_ranks(second) == [1] * 7

    quadruple = PeriodicTower((1,), (), (1,), (FreeHom.from_texts(1, 1, ["aaaa"]),))
    assert mittag_leffler(quadruple).verdict is MLVerdict.FAILS


@st.composite
def periodic_towers(draw):
    rank = draw(st.sampled_from([1, 2]))
    period = draw(st.sampled_from([1, 2]))
    letters = st.sampled_from([s * i for i in range(1, rank + 1) for s in (1, -1)])
    image_words = st.lists(letters, max_size=3).map(lambda w: reduce(rank, w))
    bonds = tuple(
        FreeHom(rank, rank, tuple(draw(image_words) for _ in range(rank)))
        for _ in range(period)
    )
    return PeriodicTower((rank,), (), (rank,) * period, bonds)


@settings(max_examples=100, deadline=None)
@given(periodic_towers())
def test_passing_to_every_other_period_keeps_the_verdict(tower):
    rank, period = tower.rank(0), tower.period_length
    coarse = PeriodicTower((rank,), (), (rank,), (tower.composite(2 * period, 0),))
    fine, sparse = mittag_leffler(tower, depth=8), mittag_leffler(coarse, depth=8)
    assert fine.verdict is not MLVerdict.INCONCLUSIVE
    assert fine.verdict is sparse.verdict
    if fine.verdict is MLVerdict.HOLDS_STABLE:
        assert fine.stage_map[0].image == sparse.stage_map[0].image
