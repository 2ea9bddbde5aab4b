from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from sepgroid.semigroup.types import CPath, FreeStep

# (position, choice); choice is a direction for free idempotents, None for regular ones.
ScriptStep = Tuple[int, Optional[int]]


@dataclass(frozen=True)
class FreeTail:
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class PathTail:
    edges: tuple[str, ...]
    end: str


Tail = Union[FreeTail, PathTail]


@dataclass(frozen=True)
class EPath:
    prefix: CPath
    tail: Tail

    @property
    def is_free(self) -> bool:
        return isinstance(self.tail, FreeTail)

    def sort_key(self) -> tuple:
        steps = tuple(
            (0, step.prime, step.direction, step.power, step.branch)
            if isinstance(step, FreeStep)
            else (1, step.source, step.path, step.connector)
            for step in self.prefix.steps
        )
        tail = (0, self.tail.exponents) if isinstance(self.tail, FreeTail) else (1, self.tail.edges)
        return (self.prefix.depth, self.prefix.start, steps, tail)


@dataclass(frozen=True)
class CompactOpen:
    """A finite disjoint union of cylinders, kept in canonical order."""

    cylinders: tuple[EPath, ...] = ()

    @classmethod
    def of(cls, cylinders: tuple[EPath, ...] | list[EPath]) -> CompactOpen:
        return cls(tuple(sorted(set(cylinders), key=EPath.sort_key)))

    def __len__(self) -> int:
        return len(self.cylinders)

    def __iter__(self):
        return iter(self.cylinders)
