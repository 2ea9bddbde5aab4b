from __future__ import annotations

from dataclasses import dataclass, field
from itertools import zip_longest
from typing import Iterable, Optional, Tuple

from sepgroid.filters.types import InfinitePath
from sepgroid.lattice.types import EPath

# Witness of a germ: the E-paths gamma-part and nu-part with x = gamma.lambda, y = nu.lambda.
Witness = Optional[Tuple[EPath, EPath]]


def trimmed(values: Iterable[int]) -> tuple[int, ...]:
    """A finitely supported sequence without its trailing zeros."""
    items = list(values)
    while items and items[-1] == 0:
        items.pop()
    return tuple(items)


def _combine(left: tuple[int, ...], right: tuple[int, ...], sign: int) -> tuple[int, ...]:
    return trimmed(a + sign * b for a, b in zip_longest(left, right, fillvalue=0))


@dataclass(frozen=True)
class GermWeight:
    """An element of Z^(inf) x Z^(inf): t-exponents and length difference."""

    n1: tuple[int, ...] = ()
    n2: tuple[int, ...] = ()

    def __add__(self, other: GermWeight) -> GermWeight:
        return GermWeight(_combine(self.n1, other.n1, 1), _combine(self.n2, other.n2, 1))

    def __neg__(self) -> GermWeight:
        return GermWeight(tuple(-value for value in self.n1), tuple(-value for value in self.n2))

    @property
    def is_zero(self) -> bool:
        return not self.n1 and not self.n2


@dataclass(frozen=True)
class Germ:
    """The arrow (x, n, y) from y to x."""

    x: InfinitePath
    weight: GermWeight
    y: InfinitePath
    witness: Witness = field(default=None, compare=False)

    @property
    def range(self) -> InfinitePath:
        return self.x

    @property
    def source(self) -> InfinitePath:
        return self.y
