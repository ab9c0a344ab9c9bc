"""
Named Group Registry
Loads annotations for Opaque groups and finite multiplication tables from a
dotenv-style file with one `<Name>.<field>=<value>` fact per line.
"""

import logging
import os
import re
from collections import defaultdict
from typing import Dict, Optional

from dotenv import dotenv_values

from ..errors import AnnotationError, SemanticError
from ..invariants.types import EndCount
from ..towers.protype import ProType
from .expr import AnnotationSet, FiniteTable, GroupExpr, Opaque

logger = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = re.compile(r"^(Amal|HNN|Ext|FI|QFN|Graph|x|inf|Z[0-9]*|F[0-9]+|Sg[0-9]+)$")
_TRUE = {"true", "yes", "1", "on"}
_FALSE = {"false", "no", "0", "off"}

ANNOTATION_FIELDS = ("ends", "semistable", "proType", "oneRelator", "cdAtMost2", "p3r")
TABLE_FIELDS = ("elements", "table")


def _flag(name: str, field: str, value: str) -> bool:
    text = value.strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise AnnotationError(f"{name}.{field}: expected true/false, got {value!r}")


class GroupRegistry:
    """Resolves identifiers in expressions to named groups"""

    def __init__(self, groups: Optional[Dict[str, GroupExpr]] = None, source: str = "<memory>"):
        self.groups: Dict[str, GroupExpr] = dict(groups or {})
        self.source = source

    @classmethod
    def load(cls, path: str) -> "GroupRegistry":
        """
        Load a registry file.

        Args:
            path: Annotation file; a missing file gives an empty registry

        Returns:
            GroupRegistry with one entry per name in the file
        """
        if not os.path.exists(path):
            logger.warning(f"Annotation file {path} not found; named groups stay unannotated")
            return cls(source=path)
        return cls.from_mapping(dotenv_values(path), source=path)

    @classmethod
    def from_mapping(cls, values: Dict[str, Optional[str]], source: str = "<memory>") -> "GroupRegistry":
        facts: Dict[str, Dict[str, str]] = defaultdict(dict)
        for key, value in values.items():
            name, _, field = key.partition(".")
            if not field:
                raise AnnotationError(f"{source}: key {key!r} is not of the form <Name>.<field>")
            if not _NAME.match(name) or _RESERVED.match(name):
                raise AnnotationError(f"{source}: {name!r} cannot be used as a group name")
            if field not in ANNOTATION_FIELDS + TABLE_FIELDS:
                raise AnnotationError(f"{source}: unknown field {key!r}")
            if value is None:
                raise AnnotationError(f"{source}: {key} has no value")
            facts[name][field] = value

        groups = {name: cls._build(name, fields) for name, fields in facts.items()}
        logger.info(f"Loaded {len(groups)} named groups from {source}")
        return cls(groups, source)

    @staticmethod
    def _build(name: str, fields: Dict[str, str]) -> GroupExpr:
        if any(f in fields for f in TABLE_FIELDS):
            if set(fields) != set(TABLE_FIELDS):
                raise AnnotationError(f"{name}: a finite table needs exactly 'elements' and 'table'")
            elements = tuple(label.strip() for label in fields["elements"].split(","))
            position = {label: i for i, label in enumerate(elements)}
            try:
                rows = tuple(
                    tuple(position[label.strip()] for label in row.split(","))
                    for row in fields["table"].split(";") if row.strip()
                )
            except KeyError as e:
                raise AnnotationError(f"{name}: table entry {e.args[0]!r} is not an element") from None
            try:
                return FiniteTable(name, elements, rows)
            except SemanticError as e:
                raise AnnotationError(str(e)) from None

        try:
            annotations = AnnotationSet(
                ends=EndCount.from_text(fields["ends"]) if "ends" in fields else None,
                semistable=_flag(name, "semistable", fields["semistable"]) if "semistable" in fields else None,
                pro_type=ProType.parse(fields["proType"]) if "proType" in fields else None,
                one_relator=_flag(name, "oneRelator", fields.get("oneRelator", "false")),
                cd_at_most_2=_flag(name, "cdAtMost2", fields.get("cdAtMost2", "false")),
                p3r=_flag(name, "p3r", fields["p3r"]) if "p3r" in fields else None,
            )
        except ValueError as e:
            raise AnnotationError(f"{name}: {e}") from None
        return Opaque(name, annotations)

    def lookup(self, name: str) -> GroupExpr:
        if name in self.groups:
            return self.groups[name]
        logger.debug(f"{name} is not in {self.source}; treating it as unannotated")
        return Opaque(name)

    def __contains__(self, name: str) -> bool:
        return name in self.groups

    def __len__(self) -> int:
        return len(self.groups)
