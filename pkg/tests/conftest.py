"""
Shared fixtures: the shipped annotation registry, rule engines and a
cache-isolated orchestrator
"""

import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

from src.classifier.classifier import Classifier, Comparator  # noqa: E402
from src.engine import Pro2EqEngine  # noqa: E402
from src.groups.grammar import parse  # noqa: E402
from src.groups.normalize import normalize  # noqa: E402
from src.groups.registry import GroupRegistry  # noqa: E402
from src.invariants.engine import InvariantEngine  # noqa: E402
from src.utils.config import Config  # noqa: E402

ANNOTATIONS = os.path.join(ROOT, "data", "groups.env")
TOWERS = os.path.join(ROOT, "data", "towers")
BATCH_EXAMPLE = os.path.join(ROOT, "data", "batch_example.txt")

ENV_NAMES = (
    "PRO2EQ_ANNOTATIONS", "PRO2EQ_DEPTH", "PRO2EQ_BUDGET", "PRO2EQ_MARGIN",
    "PRO2EQ_STRICT_PAPER", "PRO2EQ_CACHE", "PRO2EQ_WORKERS",
)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive Cayley ball and word sweeps")


def tower_path(name: str) -> str:
    return os.path.join(TOWERS, name)


@pytest.fixture(scope="session")
def registry():
    return GroupRegistry.load(ANNOTATIONS)


@pytest.fixture(scope="session")
def parse_expr(registry):
    """Parse and normalize with the shipped registry"""
    return lambda text: normalize(parse(text, registry))


@pytest.fixture(scope="session")
def invariants():
    return InvariantEngine()


@pytest.fixture(scope="session")
def strict_invariants():
    return InvariantEngine(strict=True)


@pytest.fixture(scope="session")
def classifier(invariants):
    return Classifier(invariants)


@pytest.fixture(scope="session")
def comparator(classifier):
    return Comparator(classifier)


@pytest.fixture(scope="session")
def strict_comparator(strict_invariants):
    return Comparator(Classifier(strict_invariants))


@pytest.fixture
def engine(tmp_path):
    return Pro2EqEngine(Config(annotations=ANNOTATIONS, cache_dir=str(tmp_path / "cache")))


@pytest.fixture
def clean_env(monkeypatch):
    """Unset the PRO2EQ_* variables; values a test loads from .env files are removed afterwards"""
    for name in ENV_NAMES:
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    return monkeypatch
