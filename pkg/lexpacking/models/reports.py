"""CLI-facing models: graph specifications and run reports."""

from __future__ import annotations

import re
from enum import IntEnum
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field, model_validator

from lexpacking.errors import UnknownFamilyError
from lexpacking.models.graph import FAMILY_NAMES, FamilySpec

_FAMILY_PATTERN = re.compile(r"^(?P<family>[a-z]+)(?::(?P<n>-?\d+))?$")


def parse_family(text: str) -> FamilySpec:
    """Parse ``path:8``, ``cycle:5``, ``complete:3``, ``empty:6`` or ``petersen``."""
    match = _FAMILY_PATTERN.match(text.strip().lower())
    if not match or match.group("family") not in FAMILY_NAMES:
        raise UnknownFamilyError(f"unknown graph family {text!r}")
    family = match.group("family")
    size = match.group("n")
    if family == "petersen":
        if size is not None and int(size) != 10:
            raise UnknownFamilyError("the Petersen graph has exactly 10 vertices")
        return FamilySpec(family="petersen", n=10)
    if size is None:
        raise UnknownFamilyError(f"family {family!r} needs a size, e.g. {family}:5")
    n = int(size)
    minimum = 3 if family == "cycle" else 1
    if n < minimum:
        raise UnknownFamilyError(f"{family} needs n >= {minimum}, got {n}")
    return FamilySpec(family=family, n=n)  # type: ignore[arg-type]


class GraphSpec(BaseModel):
    """Either a family descriptor or a path to an edge-list file."""

    family: Optional[FamilySpec] = None
    path: Optional[Path] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "GraphSpec":
        if (self.family is None) == (self.path is None):
            raise ValueError("a graph spec is either a family or a file")
        return self

    @classmethod
    def parse(cls, text: str) -> "GraphSpec":
        """Family syntax wins; anything else is taken as a file path."""
        if _FAMILY_PATTERN.match(text.strip().lower()):
            name = text.strip().lower().split(":", 1)[0]
            if name in FAMILY_NAMES:
                return cls(family=parse_family(text))
            if not Path(text).exists():
                raise UnknownFamilyError(f"unknown graph family {text!r}")
        return cls(path=Path(text))

    @property
    def label(self) -> str:
        if self.family is not None:
            return self.family.label
        return str(self.path)


class ExitCode(IntEnum):
    OK = 0
    NEGATIVE = 1
    USAGE = 2
    TIMEOUT = 3


class RunReport(BaseModel):
    """Machine-readable record of one CLI command."""

    command: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    results: dict[str, Any] = Field(default_factory=dict)
    status: str = "ok"
    exit_code: ExitCode = ExitCode.OK
    messages: list[str] = Field(default_factory=list)
