"""
Class labels of the proper 2-equivalence classification
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Optional

from ..towers.protype import ProKind, ProType


class LabelKind(Enum):
    FIN = "C_FIN"
    Z = "C_Z"
    Z3 = "C_Z3"
    Z2 = "C_Z2"
    F2xZ = "C_F2xZ"
    ONE_OTHER = "C_ONE_OTHER"
    INF = "C_INF"
    UNKNOWN = "C_UNKNOWN"


# C_INF vertex sets never contain these
MERGED = frozenset({LabelKind.FIN, LabelKind.Z, LabelKind.Z3})

_BY_PRO_KIND = {
    ProKind.TRIVIAL: LabelKind.Z3,
    ProKind.PRO_Z: LabelKind.Z2,
    ProKind.TELESCOPIC_INF: LabelKind.F2xZ,
}


@dataclass(frozen=True)
class ClassLabel:
    """
    Canonical label of a derived class.

    C_ONE_OTHER carries its evidence tag and whether that tag names a single
    pro-isomorphism class; C_INF carries the set of 1-ended vertex classes.
    """
    kind: LabelKind
    tag: Optional[str] = None
    tag_pinned: bool = False
    members: FrozenSet["ClassLabel"] = frozenset()

    def __post_init__(self):
        if self.kind is LabelKind.ONE_OTHER and not self.tag:
            raise ValueError("C_ONE_OTHER needs an evidence tag")
        if self.kind is not LabelKind.INF and self.members:
            raise ValueError(f"{self.kind.value} has no vertex set")
        if any(m.kind in MERGED or m.kind in (LabelKind.INF, LabelKind.UNKNOWN) for m in self.members):
            raise ValueError("C_INF vertex sets hold 1-ended classes other than C_Z3")

    @classmethod
    def fin(cls) -> "ClassLabel":
        return cls(LabelKind.FIN)

    @classmethod
    def z(cls) -> "ClassLabel":
        return cls(LabelKind.Z)

    @classmethod
    def unknown(cls) -> "ClassLabel":
        return cls(LabelKind.UNKNOWN)

    @classmethod
    def one_other(cls, tag: str, pinned: bool = False) -> "ClassLabel":
        return cls(LabelKind.ONE_OTHER, tag=tag, tag_pinned=pinned)

    @classmethod
    def infinite(cls, members: Iterable["ClassLabel"] = ()) -> "ClassLabel":
        return cls(LabelKind.INF, members=frozenset(m for m in members if m.kind not in MERGED))

    @classmethod
    def from_pro_type(cls, pro_type: ProType) -> "ClassLabel":
        """Label of a 1-ended semistable group with the given pro-type"""
        kind = _BY_PRO_KIND.get(pro_type.kind)
        if kind is not None:
            return cls(kind)
        if pro_type.kind is ProKind.UNKNOWN:
            return cls.one_other("proType unknown")
        tag = pro_type.tag if pro_type.kind is ProKind.OTHER else str(pro_type)
        return cls.one_other(tag, pinned=pro_type.pinned)

    @property
    def pinned(self) -> bool:
        """Equal pinned labels certify equivalence"""
        if self.kind is LabelKind.UNKNOWN:
            return False
        if self.kind is LabelKind.ONE_OTHER:
            return self.tag_pinned
        return all(m.pinned for m in self.members)

    @property
    def one_ended(self) -> bool:
        return self.kind in (LabelKind.Z3, LabelKind.Z2, LabelKind.F2xZ, LabelKind.ONE_OTHER)

    @property
    def trichotomy(self) -> bool:
        return self.kind in (LabelKind.Z3, LabelKind.Z2, LabelKind.F2xZ)

    def pro_type(self) -> Optional[ProType]:
        """Pro-type the label pins down, if any"""
        return {
            LabelKind.Z3: ProType.trivial(),
            LabelKind.Z2: ProType.pro_z(),
            LabelKind.F2xZ: ProType.telescopic_inf(),
        }.get(self.kind)

    def __str__(self) -> str:
        if self.kind is LabelKind.ONE_OTHER:
            return f"{self.kind.value}({self.tag})"
        if self.kind is LabelKind.INF:
            if not self.members:
                return f"{self.kind.value}(∅)"
            return f"{self.kind.value}({{{', '.join(sorted(str(m) for m in self.members))}}})"
        return self.kind.value
