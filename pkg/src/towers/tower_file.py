"""
Tower file format

    # comment
    tower explicit | periodic | telescopic
    rank k                       one line per stage, in order
    bond i: a->w1, b->w2         bond i maps stage i to stage i-1
    prefix / period              section markers of periodic towers
    increments 1 1 1 repeat      telescopic increments; "repeat" repeats the
                                 last one, "repeat 5 0" repeats a block,
                                 no "repeat" means all zero afterwards
"""

import logging
import re
from typing import Dict, List, Tuple

from ..errors import InputError, RankMismatch, TowerFormatError
from ..free.words import FreeHom, FreeWord, letter_name
from .tower import BaseTower, ExplicitTower, PeriodicTower, StandardTelescopic

logger = logging.getLogger(__name__)

_BOND = re.compile(r"^bond\s+(\d+)\s*:\s*(.*)$")
_KINDS = ("explicit", "periodic", "telescopic")


def _content(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _bond(number: int, body: str, source: int, target: int) -> FreeHom:
    images: Dict[int, FreeWord] = {}
    for part in filter(None, (p.strip() for p in body.split(","))):
        if "->" not in part:
            raise TowerFormatError(f"expected generator->word, got {part!r}", number)
        name, word = (s.strip() for s in part.split("->", 1))
        try:
            (letter,) = FreeWord.parse(source, name).letters
            if letter < 0:
                raise TowerFormatError(f"map generators, not inverses: {name!r}", number)
            images[letter] = FreeWord.parse(target, word)
        except TowerFormatError:
            raise
        except ValueError:
            raise TowerFormatError(f"{name!r} is not a single generator", number) from None
        except InputError as e:
            raise TowerFormatError(str(e), number) from None
    missing = [letter_name(i) for i in range(1, source + 1) if i not in images]
    if missing:
        raise TowerFormatError(f"no image given for {', '.join(missing)}", number)
    return FreeHom(source, target, tuple(images[i] for i in range(1, source + 1)))


class _Section:
    def __init__(self):
        self.ranks: List[int] = []
        self.bonds: Dict[int, Tuple[int, str]] = {}


def _sections(lines: List[Tuple[int, str]], periodic: bool) -> List[_Section]:
    sections: List[_Section] = [] if periodic else [_Section()]
    for number, line in lines:
        if periodic and line in ("prefix", "period"):
            expected = "prefix" if not sections else "period"
            if line != expected or len(sections) >= 2:
                raise TowerFormatError(f"unexpected section {line!r}", number)
            sections.append(_Section())
            continue
        if not sections:
            raise TowerFormatError("periodic towers start with a 'prefix' section", number)
        current = sections[-1]
        if line.startswith("rank"):
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise TowerFormatError(f"expected 'rank k', got {line!r}", number)
            current.ranks.append(int(parts[1]))
            continue
        match = _BOND.match(line)
        if not match:
            raise TowerFormatError(f"cannot read {line!r}", number)
        stage = int(match.group(1))
        if stage in current.bonds:
            raise TowerFormatError(f"bond {stage} given twice", number)
        current.bonds[stage] = (number, match.group(2))
    if periodic and len(sections) != 2:
        raise TowerFormatError("periodic towers need a 'prefix' and a 'period' section")
    return sections


def _build_bonds(section: _Section, rank_of, stages: range) -> Tuple[FreeHom, ...]:
    extra = set(section.bonds) - set(stages)
    if extra:
        raise TowerFormatError(f"bond {min(extra)} is outside its section (expected {stages.start}..{stages.stop - 1})")
    bonds = []
    for stage in stages:
        if stage not in section.bonds:
            raise TowerFormatError(f"missing bond {stage}")
        number, body = section.bonds[stage]
        bonds.append(_bond(number, body, rank_of(stage), rank_of(stage - 1)))
    return tuple(bonds)


def _telescopic(lines: List[Tuple[int, str]]) -> StandardTelescopic:
    if len(lines) != 1 or not lines[0][1].startswith("increments"):
        raise TowerFormatError("telescopic towers have one 'increments' line")
    number, line = lines[0]
    words = line.split()[1:]
    if "repeat" in words:
        cut = words.index("repeat")
        head, block = words[:cut], words[cut + 1:]
    else:
        head, block = words, ["0"]
    try:
        head_values = tuple(int(w) for w in head)
        block_values = tuple(int(w) for w in block)
    except ValueError:
        raise TowerFormatError(f"increments must be integers: {line!r}", number) from None
    if not head_values:
        raise TowerFormatError("give at least one increment", number)
    try:
        if "repeat" in words and not block_values:
            return StandardTelescopic.repeat_last(head_values)
        return StandardTelescopic(head_values, block_values)
    except ValueError as e:
        raise TowerFormatError(str(e), number) from None


def loads(text: str) -> BaseTower:
    """Read a tower from text in the tower file format"""
    lines = _content(text)
    if not lines:
        raise TowerFormatError("empty tower file")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "tower" or parts[1] not in _KINDS:
        raise TowerFormatError(f"expected 'tower {'|'.join(_KINDS)}'", number)
    kind, body = parts[1], lines[1:]

    try:
        if kind == "telescopic":
            return _telescopic(body)
        sections = _sections(body, periodic=kind == "periodic")
        if kind == "explicit":
            (section,) = sections
            if not section.ranks:
                raise TowerFormatError("an explicit tower needs at least one 'rank' line")
            ranks = tuple(section.ranks)
            bonds = _build_bonds(section, lambda s: ranks[s], range(1, len(ranks)))
            return ExplicitTower(ranks, bonds)

        prefix, period = sections
        ranks = tuple(prefix.ranks) + tuple(period.ranks)
        if not prefix.ranks or not period.ranks:
            raise TowerFormatError("prefix and period each need at least one 'rank' line")
        p = len(prefix.ranks)
        prefix_bonds = _build_bonds(prefix, lambda s: ranks[s], range(1, p))
        period_bonds = _build_bonds(period, lambda s: ranks[s], range(p, len(ranks)))
        return PeriodicTower(tuple(prefix.ranks), prefix_bonds, tuple(period.ranks), period_bonds)
    except InputError:
        raise
    except (RankMismatch, ValueError) as e:
        raise TowerFormatError(str(e)) from None


def load(path: str) -> BaseTower:
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"cannot read tower file {path}: {e}") from None
    tower = loads(text)
    logger.info(f"Loaded {type(tower).__name__} from {path}")
    return tower


def dumps(tower: BaseTower) -> str:
    """Write a tower in the tower file format"""
    if isinstance(tower, StandardTelescopic):
        block = " ".join(str(n) for n in tower.block)
        return f"tower telescopic\nincrements {' '.join(str(n) for n in tower.head)} repeat {block}\n"
    if isinstance(tower, ExplicitTower):
        lines = ["tower explicit", f"rank {tower.ranks[0]}"]
        for stage in range(1, len(tower.ranks)):
            lines += [f"rank {tower.ranks[stage]}", f"bond {stage}: {tower.bonds[stage - 1]}"]
        return "\n".join(lines) + "\n"
    if isinstance(tower, PeriodicTower):
        lines = ["tower periodic", "prefix"]
        for stage in range(tower.prefix_length):
            lines.append(f"rank {tower.rank(stage)}")
            if stage:
                lines.append(f"bond {stage}: {tower.bond(stage)}")
        lines.append("period")
        for stage in range(tower.prefix_length, tower.prefix_length + tower.period_length):
            lines += [f"rank {tower.rank(stage)}", f"bond {stage}: {tower.bond(stage)}"]
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot write {type(tower).__name__}")
