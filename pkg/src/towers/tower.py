"""
Towers of Free Groups
Inverse sequences F(r0) <- F(r1) <- F(r2) <- ... given by finite data
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from ..errors import RankMismatch, WindowExhausted
from ..free.words import FreeHom, compose

logger = logging.getLogger(__name__)


class BaseTower(ABC):
    """Bond i maps stage i to stage i - 1"""

    @property
    @abstractmethod
    def window(self) -> Optional[int]:
        """Last available stage, None for infinite towers"""
        pass

    @abstractmethod
    def rank(self, stage: int) -> int:
        pass

    @abstractmethod
    def bond(self, stage: int) -> FreeHom:
        pass

    def check_stage(self, stage: int):
        if stage < 0:
            raise ValueError(f"stage must be >= 0, got {stage}")
        if self.window is not None and stage > self.window:
            raise WindowExhausted(stage, self.window)

    def composite(self, upper: int, lower: int) -> FreeHom:
        """The map stage upper -> stage lower, bond(lower + 1) after ... after bond(upper)"""
        if upper < lower:
            raise ValueError(f"no map from stage {upper} up to stage {lower}")
        self.check_stage(upper)
        result = FreeHom.identity(self.rank(upper))
        for stage in range(upper, lower, -1):
            result = compose(self.bond(stage), result)
        return result

    def reindex(self, stages: Sequence[int]) -> "ExplicitTower":
        """
        Pass to a subsequence of stages.

        Args:
            stages: Strictly increasing stage numbers

        Returns:
            ExplicitTower whose bonds are the composites between selected stages
        """
        stages = list(stages)
        if not stages:
            raise ValueError("select at least one stage")
        if any(b <= a for a, b in zip(stages, stages[1:])):
            raise ValueError("stage selection must be strictly increasing")
        self.check_stage(stages[-1])
        ranks = tuple(self.rank(s) for s in stages)
        bonds = tuple(self.composite(upper, lower) for lower, upper in zip(stages, stages[1:]))
        return ExplicitTower(ranks, bonds)

    def unroll(self, depth: int) -> "ExplicitTower":
        return self.reindex(range(depth + 1))


@dataclass(frozen=True)
class ExplicitTower(BaseTower):
    """Stages 0..W listed outright"""
    ranks: Tuple[int, ...]
    bonds: Tuple[FreeHom, ...]

    def __post_init__(self):
        if not self.ranks:
            raise ValueError("an explicit tower needs at least one stage")
        if len(self.bonds) != len(self.ranks) - 1:
            raise RankMismatch(f"{len(self.ranks)} stages need {len(self.ranks) - 1} bonds, got {len(self.bonds)}")
        for stage, bond in enumerate(self.bonds, start=1):
            _check_bond(stage, bond, self.ranks[stage], self.ranks[stage - 1])

    @property
    def window(self) -> int:
        return len(self.ranks) - 1

    def rank(self, stage: int) -> int:
        self.check_stage(stage)
        return self.ranks[stage]

    def bond(self, stage: int) -> FreeHom:
        self.check_stage(stage)
        if stage < 1:
            raise ValueError("stage 0 has no outgoing bond")
        return self.bonds[stage - 1]


@dataclass(frozen=True)
class PeriodicTower(BaseTower):
    """
    Prefix stages 0..p-1, then a block of q stages repeating forever.

    Stage p + k has rank period_ranks[k % q] and bond period_bonds[k % q];
    the last period rank must equal the last prefix rank so the block can
    follow itself.
    """
    prefix_ranks: Tuple[int, ...]
    prefix_bonds: Tuple[FreeHom, ...]
    period_ranks: Tuple[int, ...]
    period_bonds: Tuple[FreeHom, ...]

    def __post_init__(self):
        if not self.prefix_ranks or not self.period_ranks:
            raise ValueError("a periodic tower needs a nonempty prefix and period")
        if len(self.prefix_bonds) != len(self.prefix_ranks) - 1:
            raise RankMismatch("prefix needs one bond per stage after stage 0")
        if len(self.period_bonds) != len(self.period_ranks):
            raise RankMismatch("period needs one bond per stage")
        if self.period_ranks[-1] != self.prefix_ranks[-1]:
            raise RankMismatch(
                f"last period rank {self.period_ranks[-1]} must equal last prefix rank {self.prefix_ranks[-1]}")
        for stage in range(1, self.prefix_length + self.period_length):
            _check_bond(stage, self.bond(stage), self.rank(stage), self.rank(stage - 1))

    @property
    def window(self) -> None:
        return None

    @property
    def prefix_length(self) -> int:
        return len(self.prefix_ranks)

    @property
    def period_length(self) -> int:
        return len(self.period_ranks)

    @property
    def first_aligned(self) -> int:
        """From this stage on, composites across one period repeat"""
        return self.prefix_length - 1

    def rank(self, stage: int) -> int:
        self.check_stage(stage)
        if stage < self.prefix_length:
            return self.prefix_ranks[stage]
        return self.period_ranks[(stage - self.prefix_length) % self.period_length]

    def bond(self, stage: int) -> FreeHom:
        if stage < 1:
            raise ValueError("stage 0 has no outgoing bond")
        if stage < self.prefix_length:
            return self.prefix_bonds[stage - 1]
        return self.period_bonds[(stage - self.prefix_length) % self.period_length]

    def period_map(self, stage: int) -> FreeHom:
        """Composite across one full period ending at an aligned stage"""
        if stage < self.first_aligned:
            raise ValueError(f"stage {stage} precedes the periodic part")
        return _period_map(self, stage)


@lru_cache(maxsize=256)
def _period_map(tower: PeriodicTower, stage: int) -> FreeHom:
    return tower.composite(stage + tower.period_length, stage)


@dataclass(frozen=True)
class StandardTelescopic(BaseTower):
    """
    Nested bases D0 in D1 in ... with |Di - Di-1| = increment i; bonds are
    the projections killing the new generators.

    Increments are head[0], head[1], ... then block repeated forever;
    block (0,) means all zero after the head.
    """
    head: Tuple[int, ...]
    block: Tuple[int, ...] = (0,)

    def __post_init__(self):
        if not self.block:
            raise ValueError("the repeating block cannot be empty")
        if any(n < 0 for n in self.head + self.block):
            raise ValueError("increments must be >= 0")

    @classmethod
    def repeat_last(cls, increments: Sequence[int]) -> "StandardTelescopic":
        increments = tuple(increments)
        return cls(increments, increments[-1:] or (0,))

    @classmethod
    def zero_after(cls, increments: Sequence[int]) -> "StandardTelescopic":
        return cls(tuple(increments), (0,))

    @property
    def window(self) -> None:
        return None

    def increment(self, stage: int) -> int:
        if stage < len(self.head):
            return self.head[stage]
        return self.block[(stage - len(self.head)) % len(self.block)]

    def rank(self, stage: int) -> int:
        self.check_stage(stage)
        return sum(self.increment(i) for i in range(stage + 1))

    def bond(self, stage: int) -> FreeHom:
        if stage < 1:
            raise ValueError("stage 0 has no outgoing bond")
        return FreeHom.projection(self.rank(stage), self.rank(stage - 1))

    @property
    def eventually_zero(self) -> bool:
        return all(n == 0 for n in self.block)

    @property
    def final_rank(self) -> Optional[int]:
        """Stable total rank when the increments are eventually zero"""
        return sum(self.head) if self.eventually_zero else None


def _check_bond(stage: int, bond: FreeHom, source: int, target: int):
    if bond.source_rank != source or bond.target_rank != target:
        raise RankMismatch(
            f"bond {stage} maps rank {bond.source_rank} -> {bond.target_rank}, expected {source} -> {target}")
