from __future__ import annotations

from collections import Counter
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from sepgroid.semigroup.types import TPart


def t_from_pairs(pairs: Iterable[tuple[int, int]]) -> TPart:
    total: Counter[int] = Counter()
    for index, exponent in pairs:
        total[index] += exponent
    return tuple(sorted((index, exponent) for index, exponent in total.items() if exponent))


def t_add(left: TPart, right: TPart) -> TPart:
    return t_from_pairs((*left, *right))


def t_negate(part: TPart) -> TPart:
    return tuple((index, -exponent) for index, exponent in part)


def t_shift(part: TPart, offset: int) -> TPart:
    """Reindex i -> i + offset, the effect of passing a free connector."""
    return tuple((index + offset, exponent) for index, exponent in part)


def t_format(part: TPart) -> str:
    if not part:
        return "-"
    return ",".join(f"{index}:{exponent}" for index, exponent in part)
