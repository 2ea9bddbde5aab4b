from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union


class PrimeKind(Enum):
    FREE = "free"
    REGULAR = "regular"


@dataclass(frozen=True)
class PrimeId:
    name: str
    kind: PrimeKind

    @property
    def is_free(self) -> bool:
        return self.kind is PrimeKind.FREE


@dataclass(frozen=True)
class Vertex:
    name: str
    prime: str


@dataclass(frozen=True)
class InternalEdge:
    name: str
    src: str
    rng: str

    @property
    def token(self) -> str:
        return f"e:{self.name}"


@dataclass(frozen=True)
class Loop:
    """The loop alpha(p, i) at the vertex of a free prime."""

    prime: str
    index: int

    @property
    def src(self) -> str:
        return self.prime

    @property
    def rng(self) -> str:
        return self.prime

    @property
    def name(self) -> str:
        return f"{self.prime}.{self.index}"

    @property
    def token(self) -> str:
        return f"a:{self.name}"


@dataclass(frozen=True)
class FreeConnector:
    """The connector beta(p, i, t) leaving the vertex of a free prime."""

    prime: str
    index: int
    branch: int
    rng: str

    @property
    def src(self) -> str:
        return self.prime

    @property
    def name(self) -> str:
        return f"{self.prime}.{self.index}.{self.branch}"

    @property
    def token(self) -> str:
        return f"b:{self.name}"


@dataclass(frozen=True)
class RegularConnector:
    name: str
    src: str
    rng: str

    @property
    def token(self) -> str:
        return f"e:{self.name}"


Connector = Union[FreeConnector, RegularConnector]
Edge = Union[InternalEdge, Loop, FreeConnector, RegularConnector]


@dataclass(frozen=True)
class Violation:
    condition: str
    item: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.condition}] {self.item}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations
