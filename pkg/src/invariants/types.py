"""
Value types of the invariant engine
"""

from enum import Enum
from typing import Optional


class EndCount(Enum):
    """Number of ends of a finitely generated group"""
    ZERO = "ZERO"
    TWO = "TWO"
    ONE = "ONE"
    INF = "INF"
    UNKNOWN = "UNKNOWN"

    @property
    def determined(self) -> bool:
        return self is not EndCount.UNKNOWN

    @classmethod
    def from_text(cls, text: str) -> "EndCount":
        """Accepts the annotation spellings 0, 1, 2, inf as well as member names"""
        value = text.strip().upper()
        aliases = {"0": cls.ZERO, "1": cls.ONE, "2": cls.TWO, "INF": cls.INF, "∞": cls.INF}
        if value in aliases:
            return aliases[value]
        return cls(value)


class TriState(Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    UNKNOWN = "UNKNOWN"

    @property
    def determined(self) -> bool:
        return self is not TriState.UNKNOWN

    @classmethod
    def of(cls, flag: Optional[bool]) -> "TriState":
        if flag is None:
            return cls.UNKNOWN
        return cls.TRUE if flag else cls.FALSE


class PNumber(Enum):
    """The boundary number: minimal count of plane boundary components"""
    P0 = "P0"
    P1 = "P1"
    P2 = "P2"
    PINF = "PINF"
    UNKNOWN = "UNKNOWN"

    @property
    def determined(self) -> bool:
        return self is not PNumber.UNKNOWN

    @property
    def h2rank(self) -> "H2Rank":
        """rank H^2(G; ZG), which is P - 1 whenever P is nonzero"""
        return {
            PNumber.P0: H2Rank.ZERO,
            PNumber.P1: H2Rank.ZERO,
            PNumber.P2: H2Rank.ONE,
            PNumber.PINF: H2Rank.INF,
        }.get(self, H2Rank.UNKNOWN)

    @property
    def display(self) -> str:
        return {PNumber.P0: "0", PNumber.P1: "1", PNumber.P2: "2", PNumber.PINF: "INF"}.get(self, "UNKNOWN")


class H2Rank(Enum):
    ZERO = "0"
    ONE = "1"
    INF = "INF"
    UNKNOWN = "UNKNOWN"

    @property
    def determined(self) -> bool:
        return self is not H2Rank.UNKNOWN

    def plus_one(self) -> Optional[str]:
        """h2rank + 1 with INF + 1 = INF; None when undetermined"""
        return {H2Rank.ZERO: "1", H2Rank.ONE: "2", H2Rank.INF: "INF"}.get(self)
