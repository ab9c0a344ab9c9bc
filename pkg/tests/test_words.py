import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import LetterOutOfRange, RankMismatch
from src.free.words import FreeHom, FreeWord, compose, letter_name, reduce

WORDS = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8).map(lambda letters: reduce(2, letters))
HOMS = st.tuples(WORDS, WORDS).map(lambda images: FreeHom(2, 2, images))


def test_parsing_and_printing():
    word = FreeWord.parse(2, "abA")
    assert word.letters == (1, 2, -1)
    assert str(word) == "a b A"
    assert FreeWord.parse(2, "a b A") == word
    assert FreeWord.parse(2, "a A").is_identity
    assert str(FreeWord.parse(2, "1")) == "1"


def test_indexed_generators_past_z():
    assert letter_name(27) == "g27"
    assert letter_name(-27) == "G27"
    assert FreeWord.parse(30, "g27 G27").is_identity
    assert FreeWord.parse(30, "g27").letters == (27,)


def test_letters_must_fit_the_rank():
    with pytest.raises(LetterOutOfRange):
        FreeWord.parse(1, "b")
    with pytest.raises(LetterOutOfRange):
        reduce(2, [3])
    with pytest.raises(LetterOutOfRange):
        reduce(2, [0])


def test_unreduced_letters_are_rejected():
    with pytest.raises(ValueError):
        FreeWord(2, (1, -1))
    assert reduce(2, [1, 2, -2, -1]).is_identity


def test_arithmetic():
    a, b = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
    assert (a * b * ~a).letters == (1, 2, -1)
    assert (a ** 3).letters == (1, 1, 1)
    assert (a ** -2).letters == (-1, -1)
    assert len(a * b) == 2
    with pytest.raises(RankMismatch):
        a * FreeWord.generator(3, 1)


def test_homomorphisms():
    f = FreeHom.from_texts(2, 2, ["a b", "B"])
    assert f(FreeWord.parse(2, "ab")).letters == (1,)
    assert str(f) == "a->a b, b->B"
    assert FreeHom.trivial(2, 1).is_trivial
    assert FreeHom.projection(3, 1)(FreeWord.parse(3, "abc")) == FreeWord.parse(1, "a")
    assert FreeHom.inclusion(1, 2)(FreeWord.parse(1, "aa")) == FreeWord.parse(2, "aa")
    with pytest.raises(RankMismatch):
        FreeHom.projection(1, 2)
    with pytest.raises(RankMismatch):
        FreeHom(2, 2, (FreeWord.parse(2, "a"),))


def test_compose_applies_the_right_map_first():
    g = FreeHom.from_texts(2, 2, ["ab", "b"])
    f = FreeHom.from_texts(2, 1, ["a", "1"])
    assert compose(f, g)(FreeWord.parse(2, "a")) == FreeWord.parse(1, "a")
    with pytest.raises(RankMismatch):
        compose(g, f)


@settings(max_examples=200)
@given(WORDS, WORDS, WORDS)
def test_group_laws(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert (u * ~u).is_identity
    assert ~(u * v) == ~v * ~u


@settings(max_examples=200)
@given(HOMS, HOMS, WORDS, WORDS)
def test_maps_are_homomorphisms(f, g, u, v):
    assert f(u * v) == f(u) * f(v)
    assert f(~u) == ~f(u)
    assert compose(f, g)(u) == f(g(u))
    assert FreeHom.identity(2)(u) == u
