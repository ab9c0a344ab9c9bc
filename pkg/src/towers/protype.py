"""
Pro-isomorphism types of towers of free groups
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional


class ProKind(Enum):
    TRIVIAL = "TRIVIAL"
    PRO_Z = "PRO_Z"
    TELESCOPIC_INF = "TELESCOPIC_INF"
    STABLE_FREE = "STABLE_FREE"
    OTHER = "OTHER"
    UNKNOWN = "UNKNOWN"


ONE_OF_THREE = "one-of-three"

_TEXT = re.compile(r"^(?P<kind>[A-Z_]+)(\((?P<arg>[^)]*)\))?$")


@dataclass(frozen=True)
class ProType:
    """
    Pro-type of a fundamental pro-group.

    STABLE_FREE carries the stable free rank (>= 2; rank 1 is stored as
    PRO_Z), OTHER carries an evidence tag.
    """
    kind: ProKind
    rank: Optional[int] = None
    tag: Optional[str] = None

    def __post_init__(self):
        if self.kind is ProKind.STABLE_FREE:
            if self.rank is None or self.rank < 1:
                raise ValueError("STABLE_FREE needs a rank >= 1")
            if self.rank == 1:
                object.__setattr__(self, "kind", ProKind.PRO_Z)
                object.__setattr__(self, "rank", None)
        elif self.rank is not None:
            raise ValueError(f"{self.kind.value} carries no rank")
        if self.kind is ProKind.OTHER and not self.tag:
            raise ValueError("OTHER needs an evidence tag")

    @classmethod
    def trivial(cls) -> "ProType":
        return cls(ProKind.TRIVIAL)

    @classmethod
    def pro_z(cls) -> "ProType":
        return cls(ProKind.PRO_Z)

    @classmethod
    def telescopic_inf(cls) -> "ProType":
        return cls(ProKind.TELESCOPIC_INF)

    @classmethod
    def stable_free(cls, rank: int) -> "ProType":
        if rank == 0:
            return cls.trivial()
        return cls(ProKind.STABLE_FREE, rank=rank)

    @classmethod
    def other(cls, tag: str) -> "ProType":
        return cls(ProKind.OTHER, tag=tag)

    @classmethod
    def unknown(cls) -> "ProType":
        return cls(ProKind.UNKNOWN)

    @property
    def determined(self) -> bool:
        return self.kind is not ProKind.UNKNOWN

    @property
    def telescopic(self) -> bool:
        """One of the three telescopic normal forms"""
        return self.kind in (ProKind.TRIVIAL, ProKind.PRO_Z, ProKind.TELESCOPIC_INF)

    @property
    def pinned(self) -> bool:
        """Names a single pro-isomorphism class"""
        if self.kind is ProKind.OTHER:
            return self.tag != ONE_OF_THREE
        return self.determined

    def __str__(self) -> str:
        if self.kind is ProKind.STABLE_FREE:
            return f"STABLE_FREE({self.rank})"
        if self.kind is ProKind.OTHER:
            return f"OTHER({self.tag})"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "ProType":
        match = _TEXT.match(text.strip())
        if not match:
            raise ValueError(f"not a pro-type: {text!r}")
        kind = ProKind(match.group("kind"))
        arg = match.group("arg")
        if kind is ProKind.STABLE_FREE:
            return cls.stable_free(int(arg))
        if kind is ProKind.OTHER:
            return cls.other(arg)
        if arg is not None:
            raise ValueError(f"{kind.value} takes no argument")
        return cls(kind)
