from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from sepgroid.graph.separated_graph import SeparatedGraph

DEFAULT_MAX_STEPS = 100_000
DEFAULT_MAX_WEIGHT = 40
DEFAULT_MAX_Z_WEIGHT = 4
DEFAULT_MAX_DEPTH = 0
DEFAULT_MAX_EXP = 6
DEFAULT_MAX_LEN = 8


@dataclass(frozen=True)
class Budget:
    """Limits for the monoid searches."""

    max_steps: int = DEFAULT_MAX_STEPS
    max_weight: int = DEFAULT_MAX_WEIGHT
    max_z_weight: int = DEFAULT_MAX_Z_WEIGHT


@dataclass(frozen=True)
class Bounds:
    """Limits for enumerating paths and points. ``max_depth = 0`` means one step per prime."""

    max_depth: int = DEFAULT_MAX_DEPTH
    max_exp: int = DEFAULT_MAX_EXP
    max_len: int = DEFAULT_MAX_LEN

    def depth_for(self, graph: SeparatedGraph) -> int:
        return self.max_depth or len(graph.primes)
