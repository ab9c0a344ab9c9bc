import os

import pytest

from conftest import TOWERS
from src.errors import InputError, TowerFormatError
from src.towers.tower import ExplicitTower, PeriodicTower, StandardTelescopic
from src.towers.tower_file import dumps, load, loads

SHIPPED = sorted(name for name in os.listdir(TOWERS) if name.endswith(".twr"))


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_towers_survive_writing(name):
    tower = load(os.path.join(TOWERS, name))
    assert loads(dumps(tower)) == tower


def test_kinds():
    assert isinstance(load(os.path.join(TOWERS, "killing_f2.twr")), ExplicitTower)
    assert isinstance(load(os.path.join(TOWERS, "dyadic.twr")), PeriodicTower)
    assert load(os.path.join(TOWERS, "telescopic_50.twr")) == StandardTelescopic((5, 0), (5, 0))
    assert load(os.path.join(TOWERS, "telescopic_111.twr")) == StandardTelescopic((1,), (1,))


def test_comments_and_blank_lines_are_ignored():
    text = "# header\n\ntower telescopic   # kind\nincrements 2 1   # no repeat\n"
    assert loads(text) == StandardTelescopic((2, 1), (0,))


def test_repeat_without_a_block_repeats_the_last_increment():
    assert loads("tower telescopic\nincrements 3 1 repeat") == StandardTelescopic((3, 1), (1,))


@pytest.mark.parametrize("text,line", [
    ("tower foo", 1),
    ("# nothing\ntower explicit\nrank 2\nrank 2\nbond 1: a->c, b->b", 5),
    ("tower explicit\nrank 1\nrank 2\nbond 1: A->a, b->a", 4),
    ("tower explicit\nrank 1\nrank 2\nbond 1: ab->a, b->a", 4),
    ("tower explicit\nrank 1\nrank 2\nbond 1: a->a", 4),
    ("tower explicit\nrank 1\nrank 2\nbond 1: a a", 4),
    ("tower explicit\nrank 1\nrank 1\nbond 1: a->a\nbond 1: a->a", 5),
    ("tower explicit\nrank two", 2),
    ("tower explicit\nhello", 2),
    ("tower periodic\nrank 1", 2),
    ("tower periodic\nprefix\nrank 1\nprefix", 4),
    ("tower telescopic\nincrements 1 x", 2),
    ("tower telescopic\nincrements", 2),
    ("tower telescopic\nincrements 1 -1", 2),
])
def test_format_errors_name_the_line(text, line):
    with pytest.raises(TowerFormatError) as info:
        loads(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}: ")
    assert str(info.value).count("line ") == 1


@pytest.mark.parametrize("text", [
    "",
    "# only a comment",
    "tower explicit\nrank 2\nrank 2",
    "tower explicit\nrank 1\nbond 1: a->a",
    "tower periodic\nprefix\nrank 1",
    "tower periodic\nprefix\nrank 1\nperiod\nrank 2\nbond 1: a->a, b->a",
    "tower telescopic\nincrements 1\nincrements 2",
])
def test_structural_errors(text):
    with pytest.raises(TowerFormatError):
        loads(text)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        load(str(tmp_path / "missing.twr"))
