"""
Main Engine Class
Orchestrates parsing, invariants, classification, towers, the Cayley oracle and the result cache
"""

import hashlib
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .classifier.classifier import Classifier, Comparator, explain, replay
from .classifier.labels import LabelKind
from .errors import InputError, Pro2EqError
from .groups.expr import GroupExpr
from .groups.grammar import parse
from .groups.normalize import normalize
from .groups.registry import GroupRegistry
from .invariants.engine import InvariantEngine
from .oracle.cayley import ball, estimate_ends, to_dot
from .oracle.normal_forms import realize
from .towers.analysis import (
    MLVerdict, TrivialityVerdict, mittag_leffler, pro_iso_telescopic, pro_trivial, telescopic_type,
)
from .towers.tower import BaseTower
from .towers import tower_file
from .utils.config import Config
from .utils.database import ResultCache

logger = logging.getLogger(__name__)

ENGINE_VERSION = "1.0.0"

TOWER_COMMANDS = ("ml", "protrivial", "type", "proiso")


class Pro2EqEngine:
    """Owns the registry, rule engines and cache; one method per command"""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self.registry = GroupRegistry.load(self.config.annotations)
        self.fingerprint = hashlib.sha256(
            repr(sorted((name, repr(group)) for name, group in self.registry.groups.items())).encode()
        ).hexdigest()
        self.invariants = InvariantEngine(strict=self.config.strict_paper)
        self.classifier = Classifier(self.invariants)
        self.comparator = Comparator(self.classifier)

        self.cache: Optional[ResultCache] = None
        if self.config.use_cache:
            self.cache = ResultCache(self.config.ensure_cache_dir(), ENGINE_VERSION)
            purged = self.cache.purge_stale()
            if purged:
                logger.info(f"Dropped {purged} cached results from older engine versions")
        logger.info(f"Engine ready: {len(self.registry)} named groups, strict={self.config.strict_paper}")

    def parse(self, text: str) -> GroupExpr:
        return parse(text, self.registry)

    def _cached(self, kind: str, parts: Sequence[str], compute: Callable[[], Dict[str, Any]],
                settings: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        if self.cache is None:
            return compute()
        key = self.cache.key(kind, parts, self.config.strict_paper, dict(settings or {}, registry=self.fingerprint))
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        payload = compute()
        self.cache.put(key, kind, payload)
        return payload

    def classify(self, text: str) -> Tuple[Dict[str, Any], int]:
        """
        Classify one expression.

        Returns:
            (JSON payload, exit code: 0 when classified, 2 for C_UNKNOWN)
        """
        expr = normalize(self.parse(text))

        def compute():
            fact = self.classifier.evaluate(expr)
            return {
                "expr": str(expr),
                "label": str(fact.value),
                "pinned": fact.value.pinned,
                "derivation": [entry.to_dict() for entry in fact.trace],
            }

        payload = self._cached("classify", [str(expr)], compute)
        return payload, 2 if payload["label"] == LabelKind.UNKNOWN.value else 0

    def compare(self, first: str, second: str, with_explanation: bool = False) -> Tuple[Dict[str, Any], int]:
        """Compare two expressions; exit code 0/1/2 for EQUIVALENT/INEQUIVALENT/UNKNOWN"""
        a, b = normalize(self.parse(first)), normalize(self.parse(second))

        def compute():
            verdict = self.comparator.compare(a, b)
            payload = verdict.to_dict()
            if with_explanation:
                payload["explanation"] = explain(verdict).splitlines()
                payload["replay"] = list(replay(verdict))
            return payload

        payload = self._cached("compare", [str(a), str(b)], compute, {"explain": with_explanation})
        codes = {"EQUIVALENT": 0, "INEQUIVALENT": 1, "UNKNOWN": 2}
        return payload, codes[payload["verdict"]]

    def invariants_report(self, text: str) -> Tuple[Dict[str, Any], int]:
        expr = normalize(self.parse(text))

        def compute():
            payload = {"expr": str(expr)}
            payload.update(self.invariants.report(expr).to_dict())
            return payload

        return self._cached("invariants", [str(expr)], compute), 0

    def ends(self, text: str, k: int, radius: int, dot: Optional[str] = None,
             tsv: Optional[str] = None) -> Tuple[Dict[str, Any], int]:
        """Empirical ends from the Cayley ball; never cached (it writes files)"""
        expr = normalize(self.parse(text))
        group = realize(expr)
        estimate = estimate_ends(group, k, radius, margin=self.config.margin, budget=self.config.budget)
        payload = {"expr": str(expr)}
        payload.update(estimate.to_dict())
        payload["engine"] = self.invariants.ends(expr).value.value
        if tsv is not None:
            estimate.to_tsv(tsv)
        if dot is not None:
            with open(dot, "w") as f:
                f.write(to_dot(ball(group, radius, self.config.budget), group))
            logger.info(f"Wrote ball of radius {radius} to {dot}")
        return payload, 0

    def _depth(self, tower: BaseTower, depth: Optional[int]) -> int:
        if depth is not None:
            return depth
        if tower.window is not None:
            return max(min(self.config.depth, tower.window), 1)
        return self.config.depth

    def tower(self, command: str, paths: Sequence[str], depth: Optional[int] = None) -> Tuple[Dict[str, Any], int]:
        """
        Run a tower command on tower files.

        Args:
            command: ml, protrivial, type or proiso
            paths: One tower file (two for proiso)
            depth: Stages to examine; defaults to the configured depth,
                clamped to the window of explicit towers

        Returns:
            (JSON payload, exit code: 1 when towers are not pro-isomorphic,
            2 when a verdict is inconclusive, else 0)
        """
        if command not in TOWER_COMMANDS:
            raise InputError(f"unknown tower command {command!r}; expected one of {', '.join(TOWER_COMMANDS)}")
        expected = 2 if command == "proiso" else 1
        if len(paths) != expected:
            raise InputError(f"tower {command} takes {expected} file(s), got {len(paths)}")
        towers = [tower_file.load(p) for p in paths]

        if command == "proiso":
            first, second = towers
            same = pro_iso_telescopic(first, second)
            payload = {"proIso": same, "typeA": str(telescopic_type(first)), "typeB": str(telescopic_type(second))}
            return payload, 0 if same else 1

        tower = towers[0]
        if command == "type":
            return {"type": str(telescopic_type(tower))}, 0
        stages = self._depth(tower, depth)
        if command == "ml":
            result = mittag_leffler(tower, stages)
            payload = {"depth": stages}
            payload.update(result.to_dict())
            return payload, 2 if result.verdict is MLVerdict.INCONCLUSIVE else 0
        result = pro_trivial(tower, stages)
        payload = {"depth": stages}
        payload.update(result.to_dict())
        return payload, 2 if result.verdict is TrivialityVerdict.INCONCLUSIVE else 0

    def _batch_entry(self, line: str) -> Dict[str, Any]:
        try:
            if "~" in line:
                first, second = (side.strip() for side in line.split("~", 1))
                payload, code = self.compare(first, second)
            else:
                payload, code = self.classify(line)
            return {"input": line, "exit": code, "result": payload}
        except Pro2EqError as e:
            logger.warning(f"batch entry {line!r}: {e}")
            return {"input": line, "exit": e.exit_code, "error": str(e)}

    def batch(self, path: str) -> Tuple[List[Dict[str, Any]], int]:
        """
        Evaluate a batch file: one expression (classify) or `A ~ B` (compare)
        per line. Entries run in a thread pool; results keep input order.
        """
        try:
            with open(path) as f:
                lines = [line.split("#", 1)[0].strip() for line in f]
        except OSError as e:
            raise InputError(f"cannot read batch file {path}: {e}") from None
        entries = [line for line in lines if line]
        with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
            results = list(pool.map(self._batch_entry, entries))
        failures = [r["exit"] for r in results if "error" in r]
        logger.info(f"Batch of {len(results)} entries, {len(failures)} failed")
        return results, max(failures) if failures else 0
