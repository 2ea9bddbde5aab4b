from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from sepgroid.graph.types import PrimeKind
from sepgroid.lattice.types import CompactOpen
from sepgroid.semigroup.types import Triple


@dataclass(frozen=True)
class MonElem:
    """A non-negative integer vector over the vertices, in graph order."""

    counts: tuple[int, ...]

    def __add__(self, other: MonElem) -> MonElem:
        return MonElem(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: MonElem) -> MonElem:
        if not self.dominates(other):
            msg = "Monoid subtraction would go negative"
            raise ValueError(msg)
        return MonElem(tuple(a - b for a, b in zip(self.counts, other.counts)))

    def dominates(self, other: MonElem) -> bool:
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def minimum(self, other: MonElem) -> MonElem:
        return MonElem(tuple(min(a, b) for a, b in zip(self.counts, other.counts)))

    def scaled(self, factor: int) -> MonElem:
        return MonElem(tuple(factor * a for a in self.counts))

    @property
    def weight(self) -> int:
        return sum(self.counts)

    @property
    def is_zero(self) -> bool:
        return not any(self.counts)


@dataclass(frozen=True)
class Relation:
    """a_v = sum of a_r(e) over the class ``index`` of C_v (0-based)."""

    vertex: str
    index: int
    lhs: MonElem
    rhs: MonElem


@dataclass(frozen=True)
class Presentation:
    vertices: tuple[str, ...]
    relations: tuple[Relation, ...]

    def zero(self) -> MonElem:
        return MonElem((0,) * len(self.vertices))

    def generator(self, vertex: str, count: int = 1) -> MonElem:
        if vertex not in self.vertices:
            msg = f"Unknown vertex {vertex!r}"
            raise KeyError(msg)
        return MonElem(tuple(count if name == vertex else 0 for name in self.vertices))


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# A forward rewrite: expand one copy of ``vertex`` along class ``index``.
Move = Tuple[str, int]


@dataclass(frozen=True)
class EqResult:
    verdict: Verdict
    path: tuple[MonElem, ...] = ()
    budget_exhausted: bool = False


@dataclass(frozen=True)
class LeqResult:
    verdict: Verdict
    z: Optional[MonElem] = None
    budget_exhausted: bool = False


@dataclass(frozen=True)
class RefinementResult:
    verdict: Verdict
    witness: Optional[tuple[MonElem, MonElem, MonElem, MonElem]] = None
    budget_exhausted: bool = False


@dataclass(frozen=True)
class MeetResult:
    """Forward rewrites taking both sides to the common descendant ``meet``."""

    meet: MonElem
    left_moves: tuple[Move, ...]
    right_moves: tuple[Move, ...]


@dataclass(frozen=True)
class EquidecompCertificate:
    """s_k with s_k* s_k partitioning ``source`` and s_k s_k* partitioning ``target``."""

    elements: tuple[Triple, ...]
    multiplicities: tuple[int, ...]
    source: CompactOpen
    target: CompactOpen


@dataclass(frozen=True)
class EquidecompResult:
    verdict: Verdict
    certificate: Optional[EquidecompCertificate] = None
    path: tuple[MonElem, ...] = field(default=(), compare=False)
    budget_exhausted: bool = False


@dataclass(frozen=True)
class Classification:
    vertex: str
    kind: PrimeKind
    consistent: bool
    witness: Optional[MonElem] = None
