from __future__ import annotations

from typing import TYPE_CHECKING, Iterable

from sepgroid.errors import PreconditionError
from sepgroid.lattice.types import CompactOpen, EPath, FreeTail, PathTail
from sepgroid.semigroup.types import FreeStep, RegularStep, Zero

if TYPE_CHECKING:
    from sepgroid.lattice.idempotents import IdempotentLattice
    from sepgroid.semigroup.types import Element


class CylinderAlgebra:
    """Boolean operations on finite disjoint unions of cylinders Z(mu)."""

    def __init__(self, lattice: IdempotentLattice) -> None:
        self.lattice = lattice
        self.graph = lattice.graph

    def cylinder(self, element: Element) -> CompactOpen:
        return CompactOpen((self.lattice.epath_of(element),))

    def empty(self) -> CompactOpen:
        return CompactOpen()

    def as_compact_open(self, elements: Iterable[Element]) -> CompactOpen:
        """Disjoint cylinders covering the union of Z(e) over a family of idempotents."""
        result = self.empty()
        for element in elements:
            if not isinstance(element, Zero):
                result = self.union(result, self.cylinder(element))
        return result

    # Z(mu) minus Z(rho)

    def difference(self, outer: EPath, inner: EPath) -> list[EPath]:
        common = self.lattice.meet_epaths(outer, inner)
        if common is None:
            return [outer]
        if common == outer:
            return []
        return self._peel(outer, common)

    def _peel(self, outer: EPath, inner: EPath) -> list[EPath]:
        """Z(outer) minus Z(inner) for inner strictly below outer."""
        rest = inner.prefix.strip_prefix(outer.prefix)
        if rest is None:
            msg = "inner cylinder does not lie below the outer one"
            raise PreconditionError(msg)

        tail = outer.tail
        if rest.is_trivial:
            if isinstance(tail, FreeTail) and isinstance(inner.tail, FreeTail):
                return [
                    self.lattice.free_branch(outer, j, power, branch)
                    for j, (have, want) in enumerate(zip(tail.exponents, inner.tail.exponents), start=1)
                    for power in range(have, want)
                    for branch in range(1, self.graph.branches(outer.prefix.end, j) + 1)
                ]
            if isinstance(tail, PathTail) and isinstance(inner.tail, PathTail):
                return self._complement_along(outer, inner.tail.edges[len(tail.edges) :])
            msg = "cylinders over the same c-path end at different kinds of prime"
            raise PreconditionError(msg)

        step = rest.steps[0]
        child = EPath(outer.prefix.extended(step), self.lattice.trivial_tail(step.target))
        if isinstance(step, FreeStep) and isinstance(tail, FreeTail):
            exponents = list(tail.exponents)
            have = exponents[step.direction - 1]
            exponents[step.direction - 1] = step.power + 1
            pieces = [EPath(outer.prefix, FreeTail(tuple(exponents)))]
            pieces.extend(
                self.lattice.free_branch(outer, step.direction, power, branch)
                for power in range(have, step.power + 1)
                for branch in range(1, self.graph.branches(step.prime, step.direction) + 1)
                if (power, branch) != (step.power, step.branch)
            )
        elif isinstance(step, RegularStep) and isinstance(tail, PathTail):
            pieces = self._complement_along(outer, (*step.path[len(tail.edges) :], step.connector))
        else:
            msg = "c-path step does not match the kind of the outer cylinder"
            raise PreconditionError(msg)

        if child != inner:
            pieces.extend(self._peel(child, inner))
        return pieces

    def _complement_along(self, outer: EPath, edges: tuple[str, ...]) -> list[EPath]:
        pieces = []
        current = outer
        for name in edges:
            tail = current.tail
            if not isinstance(tail, PathTail):
                msg = "regular complement walked past a connector"
                raise PreconditionError(msg)
            for edge in self.graph.out_edges(tail.end):
                if edge.name != name:
                    pieces.append(self.lattice.extend_by_edge(current, edge))
            current = self.lattice.extend_by_edge(current, self.lattice.out_edge(tail.end, name))
        return pieces

    # Boolean ring

    def intersect(self, left: CompactOpen, right: CompactOpen) -> CompactOpen:
        pieces = []
        for a in left:
            for b in right:
                common = self.lattice.meet_epaths(a, b)
                if common is not None:
                    pieces.append(common)
        return CompactOpen.of(pieces)

    def subtract(self, left: CompactOpen, right: CompactOpen) -> CompactOpen:
        pieces = list(left)
        for b in right:
            pieces = [piece for a in pieces for piece in self.difference(a, b)]
        return CompactOpen.of(pieces)

    def union(self, left: CompactOpen, right: CompactOpen) -> CompactOpen:
        return CompactOpen.of([*left, *self.subtract(right, left)])

    def is_empty(self, value: CompactOpen) -> bool:
        return not value.cylinders

    def is_subset(self, left: CompactOpen, right: CompactOpen) -> bool:
        return self.is_empty(self.subtract(left, right))

    def equal(self, left: CompactOpen, right: CompactOpen) -> bool:
        return self.is_subset(left, right) and self.is_subset(right, left)

    def are_disjoint(self, left: CompactOpen, right: CompactOpen) -> bool:
        return self.is_empty(self.intersect(left, right))

    def normalize(self, value: CompactOpen) -> CompactOpen:
        """Canonical order, with complete sibling families merged into their parent."""
        current = set(value.cylinders)
        merged = True
        while merged:
            merged = False
            for cylinder in sorted(current, key=EPath.sort_key):
                for parent, choice in self._parents(cylinder):
                    children = set(self.lattice.simple_expand_epath(parent, choice))
                    if children <= current:
                        current = (current - children) | {parent}
                        merged = True
                        break
                if merged:
                    break
        return CompactOpen.of(list(current))

    def _parents(self, cylinder: EPath) -> list[tuple[EPath, int | None]]:
        tail = cylinder.tail
        if isinstance(tail, FreeTail):
            found: list[tuple[EPath, int | None]] = []
            for direction, exponent in enumerate(tail.exponents, start=1):
                if exponent:
                    lowered = list(tail.exponents)
                    lowered[direction - 1] -= 1
                    found.append((EPath(cylinder.prefix, FreeTail(tuple(lowered))), direction))
            return found
        if tail.edges:
            return [(EPath(cylinder.prefix, PathTail(tail.edges[:-1], self._source(tail))), None)]
        if cylinder.prefix.steps and isinstance(cylinder.prefix.steps[-1], RegularStep):
            step = cylinder.prefix.steps[-1]
            if step.path:
                end = self.graph.named_edge(step.path[-1]).rng
            else:
                end = step.source
            parent = EPath(cylinder.prefix.truncated(cylinder.prefix.depth - 1), PathTail(step.path, end))
            return [(parent, None)]
        return []

    def _source(self, tail: PathTail) -> str:
        return self.graph.named_edge(tail.edges[-1]).src
