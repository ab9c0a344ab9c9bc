"""
Tower Analysis
Mittag-Leffler and pro-triviality checks, telescopic normal forms
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import NotStandard
from ..free.folding import SubgroupGraph, equal_subgroups, image
from ..free.words import FreeWord
from .protype import ProKind, ProType
from .tower import BaseTower, ExplicitTower, PeriodicTower, StandardTelescopic

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 16


class MLVerdict(Enum):
    HOLDS_STABLE = "HOLDS_STABLE"
    FAILS = "FAILS"
    INCONCLUSIVE = "INCONCLUSIVE"


class TrivialityVerdict(Enum):
    YES = "YES"
    NO = "NO"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class StageInfo:
    """Where the image chain at a stage stops descending, and what it stops at"""
    lag: int
    image: SubgroupGraph
    certified: bool


@dataclass(frozen=True)
class MittagLefflerResult:
    verdict: MLVerdict
    stage_map: Dict[int, StageInfo] = field(default_factory=dict)
    fail_stage: Optional[int] = None
    chain: Tuple[SubgroupGraph, ...] = ()
    reason: str = ""

    def to_dict(self) -> Dict:
        data = {"verdict": self.verdict.value}
        if self.verdict is MLVerdict.HOLDS_STABLE:
            data["stages"] = {str(i): {"lag": s.lag, "stableRank": s.image.graph_rank, "full": s.image.is_full,
                                       "certified": s.certified}
                              for i, s in sorted(self.stage_map.items())}
        if self.verdict is MLVerdict.FAILS:
            data["stage"] = self.fail_stage
            data["chain"] = [[str(g) for g in h.generators()] for h in self.chain]
        if self.reason:
            data["reason"] = self.reason
        return data


@dataclass(frozen=True)
class ProTrivialResult:
    verdict: TrivialityVerdict
    lags: Dict[int, int] = field(default_factory=dict)
    stage: Optional[int] = None
    witness: Optional[FreeWord] = None
    reason: str = ""

    def to_dict(self) -> Dict:
        data = {"verdict": self.verdict.value}
        if self.verdict is TrivialityVerdict.YES:
            data["lags"] = {str(i): lag for i, lag in sorted(self.lags.items())}
        if self.verdict is TrivialityVerdict.NO:
            data["stage"] = self.stage
            data["witness"] = str(self.witness)
        if self.reason:
            data["reason"] = self.reason
        return data


def strictly_descending(chain: Sequence[SubgroupGraph]) -> bool:
    """Each term contains the next and differs from it"""
    return all(later.is_subgroup_of(earlier) and not equal_subgroups(earlier, later)
               for earlier, later in zip(chain, chain[1:]))


def _period_chain(tower: PeriodicTower, stage: int, limit: int):
    """
    Iterate the period map at an aligned stage from the full group.

    Returns ("stable", k, chain) when K_k+1 == K_k, ("fails", k, chain) when
    K_k+1 is strictly smaller with the same free rank (the period map is then
    injective on K_k and descent goes on forever), else ("open", k, chain).
    """
    period = tower.period_map(stage)
    chain = [SubgroupGraph.full(tower.rank(stage))]
    for k in range(limit):
        following = image(period, chain[-1])
        if equal_subgroups(following, chain[-1]):
            return "stable", k, chain
        chain.append(following)
        if following.graph_rank == chain[-2].graph_rank:
            chain.append(image(period, following))
            return "fails", k, chain
    return "open", limit, chain


def _ml_periodic(tower: PeriodicTower, depth: int) -> MittagLefflerResult:
    first = tower.first_aligned
    limit = max(depth // tower.period_length, 1) + 1
    outcomes = {s: _period_chain(tower, s, limit) for s in range(first, first + tower.period_length)}

    failing = sorted(s for s, (status, _, _) in outcomes.items() if status == "fails")
    if failing:
        stage = failing[0]
        _, k, chain = outcomes[stage]
        # earlier prefix stages inherit the failure when the composite is injective on K_k
        for lower in range(0, min(stage, first + 1)):
            down = tower.composite(stage, lower)
            pushed = [image(down, h) for h in chain[k:]]
            if pushed[0].graph_rank == chain[k].graph_rank and strictly_descending(pushed):
                return MittagLefflerResult(MLVerdict.FAILS, fail_stage=lower, chain=tuple(pushed))
        return MittagLefflerResult(MLVerdict.FAILS, fail_stage=stage, chain=tuple(chain[k:]))

    if any(status == "open" for status, _, _ in outcomes.values()):
        return MittagLefflerResult(MLVerdict.INCONCLUSIVE, reason=f"no certificate within {depth} stages")

    stage_map: Dict[int, StageInfo] = {}
    for i in range(depth + 1):
        if i < first:
            _, k, chain = outcomes[first]
            stable = image(tower.composite(first, i), chain[k])
            lag = first - i + k * tower.period_length
        else:
            residue = first + (i - first) % tower.period_length
            _, k, chain = outcomes[residue]
            stable = chain[k]
            lag = k * tower.period_length
        stage_map[i] = StageInfo(lag, stable, certified=True)
    return MittagLefflerResult(MLVerdict.HOLDS_STABLE, stage_map)


def _ml_explicit(tower: BaseTower, depth: int) -> MittagLefflerResult:
    tower.check_stage(depth)
    stage_map: Dict[int, StageInfo] = {}
    for i in range(depth):
        images = [image(tower.composite(j, i)) for j in range(i, depth + 1)]
        lag = None
        for offset in range(len(images) - 2, -1, -1):
            if not equal_subgroups(images[offset], images[-1]):
                break
            lag = offset
        if lag is None:
            return MittagLefflerResult(MLVerdict.INCONCLUSIVE,
                                       reason=f"images at stage {i} still descend at stage {depth}")
        stage_map[i] = StageInfo(lag, images[lag], certified=False)
    return MittagLefflerResult(MLVerdict.HOLDS_STABLE, stage_map)


def _ml_telescopic(tower: StandardTelescopic, depth: int) -> MittagLefflerResult:
    stage_map = {}
    for i in range(depth + 1):
        onto = i == 0 or image(tower.bond(i)).is_full
        if not onto:
            raise AssertionError(f"projection at stage {i} is not onto")
        stage_map[i] = StageInfo(0, SubgroupGraph.full(tower.rank(i)), certified=True)
    return MittagLefflerResult(MLVerdict.HOLDS_STABLE, stage_map)


def mittag_leffler(tower: BaseTower, depth: int = DEFAULT_DEPTH) -> MittagLefflerResult:
    """
    Decide whether the image chains of a tower stabilize.

    Periodic towers get certified verdicts; explicit towers only window
    evidence; standard telescopic towers always hold since their bonds are onto.

    Args:
        tower: Tower to analyze
        depth: Number of stages to examine

    Returns:
        MittagLefflerResult
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if isinstance(tower, StandardTelescopic):
        result = _ml_telescopic(tower, depth)
    elif isinstance(tower, PeriodicTower):
        result = _ml_periodic(tower, depth)
    else:
        result = _ml_explicit(tower, depth)
    logger.info(f"Mittag-Leffler: {result.verdict.value}")
    return result


def pro_trivial(tower: BaseTower, depth: int = DEFAULT_DEPTH) -> ProTrivialResult:
    """
    Decide pro-triviality: every stage is killed by some later composite.

    Returns YES with the lag per stage, NO with a nontrivial element that
    survives into every later stage, or INCONCLUSIVE.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    tower.check_stage(depth)

    if isinstance(tower, StandardTelescopic):
        # projections are onto, so any generator survives into every later stage
        if telescopic_type(tower).kind is ProKind.TRIVIAL:
            return ProTrivialResult(TrivialityVerdict.YES, {i: 0 for i in range(depth)})
        stage = next(i for i in range(len(tower.head) + len(tower.block)) if tower.rank(i) > 0)
        return ProTrivialResult(TrivialityVerdict.NO, stage=stage, witness=FreeWord.generator(tower.rank(stage), 1))

    lags: Dict[int, int] = {}
    for i in range(depth):
        for j in range(i, depth + 1):
            if tower.composite(j, i).is_trivial:
                lags[i] = j - i
                break
    if len(lags) == depth:
        return ProTrivialResult(TrivialityVerdict.YES, lags)

    if isinstance(tower, PeriodicTower):
        ml = _ml_periodic(tower, depth)
        if ml.verdict is MLVerdict.HOLDS_STABLE:
            for stage, info in sorted(ml.stage_map.items()):
                if not info.image.is_trivial:
                    return ProTrivialResult(TrivialityVerdict.NO, stage=stage, witness=info.image.generators()[0])
        elif ml.verdict is MLVerdict.FAILS:
            return ProTrivialResult(TrivialityVerdict.NO, stage=ml.fail_stage,
                                    witness=ml.chain[-1].generators()[0],
                                    reason="images descend strictly but never vanish")
    return ProTrivialResult(TrivialityVerdict.INCONCLUSIVE,
                            reason=f"{depth - len(lags)} stages not killed within {depth} stages")


def telescopic_type(tower: BaseTower) -> ProType:
    """Pro-type of a standard telescopic tower"""
    if not isinstance(tower, StandardTelescopic):
        raise NotStandard(f"{type(tower).__name__} is not a standard telescopic tower")
    if not tower.eventually_zero:
        return ProType.telescopic_inf()
    return ProType.stable_free(tower.final_rank)


def pro_iso_telescopic(first: BaseTower, second: BaseTower) -> bool:
    return telescopic_type(first) == telescopic_type(second)


def reindex(tower: BaseTower, stages: Sequence[int]) -> ExplicitTower:
    return tower.reindex(stages)


def stable_ranks(result: MittagLefflerResult) -> List[int]:
    """Ranks of the stable images, the window evidence for non-standard towers"""
    return [info.image.graph_rank for _, info in sorted(result.stage_map.items())]
