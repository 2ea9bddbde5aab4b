from __future__ import annotations

from typing import TYPE_CHECKING

from sepgroid.filters.enumeration import infinite_points
from sepgroid.filters.types import ExtendedFreeTail, RegularTail
from sepgroid.lattice.types import CompactOpen, EPath, FreeTail, PathTail
from sepgroid.semigroup.types import FreeStep
from sepgroid.semigroup.words import generator_tokens, parse_word

if TYPE_CHECKING:
    from random import Random

    from sepgroid.filters.types import SemifinitePath
    from sepgroid.lattice.types import ScriptStep
    from sepgroid.semigroup.types import Element
    from sepgroid.toolkit import Toolkit


class Sampler:
    """Random words, idempotents and expansion scripts over one graph."""

    def __init__(self, toolkit: Toolkit, rng: Random, max_tokens: int = 6) -> None:
        self.toolkit = toolkit
        self.rng = rng
        self.max_tokens = max_tokens
        self.alphabet = generator_tokens(toolkit.graph)
        self._points: dict[int, list[SemifinitePath]] = {}
        self._extents: dict[tuple[EPath, int], frozenset[SemifinitePath]] = {}

    def word(self) -> str:
        size = self.rng.randint(1, self.max_tokens)
        return " ".join(self.rng.choice(self.alphabet) for _ in range(size))

    def element(self) -> Element:
        return parse_word(self.word(), self.toolkit.semigroup)

    def _expandable(self, path: EPath) -> bool:
        return not isinstance(path.tail, FreeTail) or bool(path.tail.exponents)

    def _choice(self, path: EPath) -> int | None:
        if isinstance(path.tail, FreeTail):
            return self.rng.randint(1, len(path.tail.exponents))
        return None

    def script(self, root: EPath, steps: int) -> tuple[list[ScriptStep], list[EPath]]:
        """A random expansion script of at most ``steps`` moves and the set it produces."""
        lattice = self.toolkit.lattice
        script: list[ScriptStep] = []
        current = [root]
        for _ in range(steps):
            open_positions = [i for i, path in enumerate(current) if self._expandable(path)]
            if not open_positions:
                break
            position = self.rng.choice(open_positions)
            choice = self._choice(current[position])
            script.append((position, choice))
            current[position : position + 1] = lattice.simple_expand_epath(current[position], choice)
        return script, current

    def epath(self, steps: int = 3) -> EPath:
        lattice = self.toolkit.lattice
        root = lattice.vertex_epath(self.rng.choice(self.toolkit.graph.vertices))
        _, produced = self.script(root, self.rng.randint(0, steps))
        return self.rng.choice(produced)

    def idempotent(self, steps: int = 3) -> Element:
        return self.toolkit.lattice.idem_of(self.epath(steps))

    def compact_open(self, cylinders: int = 4) -> CompactOpen:
        algebra = self.toolkit.algebra
        value = algebra.empty()
        for _ in range(self.rng.randint(0, cylinders)):
            value = algebra.union(value, CompactOpen((self.epath(),)))
        return value

    def points(self, size: int) -> list[SemifinitePath]:
        if size not in self._points:
            self._points[size] = list(infinite_points(self.toolkit.graph, size))
        return self._points[size]

    def extent(self, value: CompactOpen, size: int) -> frozenset[SemifinitePath]:
        """The points of size at most ``size`` lying in ``value``."""
        filters = self.toolkit.filters
        inside: set[SemifinitePath] = set()
        for cylinder in value:
            key = (cylinder, size)
            if key not in self._extents:
                points = self.points(size)
                self._extents[key] = frozenset(x for x in points if filters.is_initial_segment(cylinder, x))
            inside |= self._extents[key]
        return frozenset(inside)

    def segment(self, path: SemifinitePath, limit: int = 4) -> EPath:
        """A random initial segment of ``path``."""
        graph = self.toolkit.graph
        depth = self.rng.randint(0, path.prefix.depth)
        prefix = path.prefix.truncated(depth)
        if depth < path.prefix.depth:
            step = path.prefix.steps[depth]
            if isinstance(step, FreeStep):
                exponents = tuple(
                    self.rng.randint(0, step.power if j == step.direction else limit)
                    for j in range(1, graph.arity(step.prime) + 1)
                )
                return EPath(prefix, FreeTail(exponents))
            edges = step.path[: self.rng.randint(0, len(step.path))]
            return EPath(prefix, PathTail(edges, self._end_of(prefix.end, edges)))
        tail = path.tail
        if isinstance(tail, ExtendedFreeTail):
            exponents = tuple(int(min(self.rng.randint(0, limit), value)) for value in tail.exponents)
            return EPath(prefix, FreeTail(exponents))
        if isinstance(tail, RegularTail):
            edges = tail.edges[: self.rng.randint(0, len(tail.edges))]
        else:
            edges = tail.first_edges(self.rng.randint(0, limit))
        return EPath(prefix, PathTail(edges, self._end_of(prefix.end, edges)))

    def _end_of(self, start: str, edges: tuple[str, ...]) -> str:
        return self.toolkit.graph.named_edge(edges[-1]).rng if edges else start
