from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

# Sparse t-exponents: sorted (index, exponent) pairs, exponents never zero.
TPart = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class FreeStep:
    """alpha(p, i)^power beta(p, i, branch), ending at ``target``."""

    prime: str
    direction: int
    power: int
    branch: int
    target: str

    @property
    def source(self) -> str:
        return self.prime

    @property
    def length(self) -> int:
        return self.power + 1

    def tokens(self) -> list[str]:
        return [f"a:{self.prime}.{self.direction}"] * self.power + [
            f"b:{self.prime}.{self.direction}.{self.branch}"
        ]


@dataclass(frozen=True)
class RegularStep:
    """An internal path of a regular component followed by one of its connectors."""

    prime: str
    source: str
    path: tuple[str, ...]
    connector: str
    target: str

    @property
    def length(self) -> int:
        return len(self.path) + 1

    def tokens(self) -> list[str]:
        return [f"e:{edge}" for edge in self.path] + [f"e:{self.connector}"]


Step = Union[FreeStep, RegularStep]


@dataclass(frozen=True)
class CPath:
    start: str
    steps: tuple[Step, ...] = ()

    @property
    def end(self) -> str:
        return self.steps[-1].target if self.steps else self.start

    @property
    def depth(self) -> int:
        return len(self.steps)

    @property
    def length(self) -> int:
        return sum(step.length for step in self.steps)

    @property
    def is_trivial(self) -> bool:
        return not self.steps

    def then(self, other: CPath) -> CPath:
        if self.end != other.start:
            msg = f"Cannot concatenate c-paths ending at {self.end} and starting at {other.start}"
            raise ValueError(msg)
        return CPath(self.start, self.steps + other.steps)

    def extended(self, step: Step) -> CPath:
        return CPath(self.start, (*self.steps, step))

    def has_prefix(self, prefix: CPath) -> bool:
        return self.start == prefix.start and self.steps[: prefix.depth] == prefix.steps

    def strip_prefix(self, prefix: CPath) -> CPath | None:
        """The remainder rho with self = prefix rho, or None."""
        if not self.has_prefix(prefix):
            return None
        return CPath(prefix.end, self.steps[prefix.depth :])

    def truncated(self, depth: int) -> CPath:
        return CPath(self.start, self.steps[:depth])

    def tokens(self) -> list[str]:
        return [token for step in self.steps for token in step.tokens()]


@dataclass(frozen=True)
class FreeBody:
    k: tuple[int, ...]
    l: tuple[int, ...]  # noqa: E741


@dataclass(frozen=True)
class RegularBody:
    """The path pair gamma nu* inside one regular component.

    ``start`` is s(gamma), ``end`` is s(nu) and ``meet`` is the common range.
    """

    gamma: tuple[str, ...]
    nu: tuple[str, ...]
    start: str
    end: str
    meet: str


Body = Union[FreeBody, RegularBody]


@dataclass(frozen=True)
class Monomial:
    prime: str
    t: TPart
    body: Body

    @property
    def is_free(self) -> bool:
        return isinstance(self.body, FreeBody)

    @property
    def source(self) -> str:
        return self.body.start if isinstance(self.body, RegularBody) else self.prime

    @property
    def range(self) -> str:
        return self.body.end if isinstance(self.body, RegularBody) else self.prime

    @property
    def is_pure_t(self) -> bool:
        if isinstance(self.body, RegularBody):
            return not self.body.gamma and not self.body.nu
        return not any(self.body.k) and not any(self.body.l)


@dataclass(frozen=True)
class TMonomial:
    base: str
    t: TPart


@dataclass(frozen=True)
class Zero:
    def __str__(self) -> str:
        return "0"


ZERO = Zero()


@dataclass(frozen=True)
class Triple:
    gamma: CPath
    mono: Monomial
    eta: CPath


Element = Union[Zero, Triple]
