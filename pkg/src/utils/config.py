"""
Configuration
Settings come from the environment (and .env), command-line flags override them
"""

import logging
import os
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from ..errors import ConfigError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Config:
    annotations: str = "./data/groups.env"
    depth: int = 16
    budget: int = 2_000_000
    margin: int = 3
    strict_paper: bool = False
    cache_dir: str = "./data/cache"
    workers: int = 4
    use_cache: bool = True

    def __post_init__(self):
        for name in ("depth", "budget", "margin", "workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")

    def override(self, **changes: Any) -> "Config":
        """Copy with the given settings replaced; None values are ignored"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def ensure_cache_dir(self) -> str:
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
        except OSError as e:
            raise ConfigError(f"cannot create cache directory {self.cache_dir}: {e}") from None
        return self.cache_dir

    def to_dict(self) -> Dict[str, Any]:
        return {
            "annotations": self.annotations,
            "depth": self.depth,
            "budget": self.budget,
            "margin": self.margin,
            "strictPaper": self.strict_paper,
            "cacheDir": self.cache_dir,
            "workers": self.workers,
        }


def _int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


def _flag(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"{name} must be true or false, got {raw!r}")


def load_config(env_file: Optional[str] = None) -> Config:
    """
    Load configuration from environment variables.

    Args:
        env_file: Optional .env file read before the environment (existing
            variables are not overwritten)

    Returns:
        Config
    """
    load_dotenv(env_file)
    config = Config(
        annotations=os.getenv("PRO2EQ_ANNOTATIONS", "./data/groups.env"),
        depth=_int("PRO2EQ_DEPTH", 16),
        budget=_int("PRO2EQ_BUDGET", 2_000_000),
        margin=_int("PRO2EQ_MARGIN", 3),
        strict_paper=_flag("PRO2EQ_STRICT_PAPER", False),
        cache_dir=os.getenv("PRO2EQ_CACHE", "./data/cache"),
        workers=_int("PRO2EQ_WORKERS", 4),
    )
    logger.debug(f"Configuration: {config.to_dict()}")
    return config
