from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from sepgroid.semigroup.types import CPath

# An exponent of a semifinite free tail: a non-negative int or math.inf.
Exponent = Union[int, float]


@dataclass(frozen=True)
class ExtendedFreeTail:
    """Exponents at a free prime, any of which may be infinite."""

    exponents: tuple[Exponent, ...]

    @property
    def is_infinite(self) -> bool:
        return all(exponent == math.inf for exponent in self.exponents)


@dataclass(frozen=True)
class RegularTail:
    edges: tuple[str, ...]
    end: str


def _primitive_root(cycle: tuple[str, ...]) -> tuple[str, ...]:
    size = len(cycle)
    for period in range(1, size + 1):
        if size % period == 0 and cycle[:period] * (size // period) == cycle:
            return cycle[:period]
    return cycle


@dataclass(frozen=True)
class RegularPeriodicTail:
    """The infinite path rho c c c ... inside one regular component.

    Build values through ``of`` so that equal paths have equal data.
    """

    rho: tuple[str, ...]
    cycle: tuple[str, ...]

    @classmethod
    def of(cls, rho: tuple[str, ...], cycle: tuple[str, ...]) -> RegularPeriodicTail:
        if not cycle:
            msg = "A periodic tail needs a nonempty cycle"
            raise ValueError(msg)
        cycle = _primitive_root(tuple(cycle))
        rho = tuple(rho)
        while rho and rho[-1] == cycle[-1]:
            rho = rho[:-1]
            cycle = (cycle[-1], *cycle[:-1])
        return cls(rho, cycle)

    def edge_at(self, index: int) -> str:
        if index < len(self.rho):
            return self.rho[index]
        return self.cycle[(index - len(self.rho)) % len(self.cycle)]

    def first_edges(self, count: int) -> tuple[str, ...]:
        return tuple(self.edge_at(index) for index in range(count))

    def dropped(self, count: int) -> RegularPeriodicTail:
        """The tail after its first ``count`` edges."""
        if count <= len(self.rho):
            return RegularPeriodicTail.of(self.rho[count:], self.cycle)
        shift = (count - len(self.rho)) % len(self.cycle)
        return RegularPeriodicTail.of((), self.cycle[shift:] + self.cycle[:shift])


SemifiniteTail = Union[ExtendedFreeTail, RegularTail, RegularPeriodicTail]


@dataclass(frozen=True)
class SemifinitePath:
    prefix: CPath
    tail: SemifiniteTail

    @property
    def is_infinite(self) -> bool:
        if isinstance(self.tail, ExtendedFreeTail):
            return self.tail.is_infinite
        return isinstance(self.tail, RegularPeriodicTail)

    @property
    def is_free(self) -> bool:
        return isinstance(self.tail, ExtendedFreeTail)

    @property
    def start(self) -> str:
        return self.prefix.start


# Infinite paths are semifinite paths with an infinite tail.
InfinitePath = SemifinitePath
