from __future__ import annotations

import logging
from itertools import combinations
from typing import TYPE_CHECKING

from sepgroid.budgets import Budget
from sepgroid.errors import PreconditionError
from sepgroid.lattice.types import CompactOpen, EPath, FreeTail, PathTail
from sepgroid.monoid.types import (
    Classification,
    EquidecompCertificate,
    EquidecompResult,
    MonElem,
    Verdict,
)
from sepgroid.semigroup.semigroup import star
from sepgroid.semigroup.types import FreeBody, Monomial, RegularBody, Triple

if TYPE_CHECKING:
    from sepgroid.lattice.cylinders import CylinderAlgebra
    from sepgroid.monoid.search import MonoidSearch
    from sepgroid.monoid.types import Move
    from sepgroid.semigroup.types import Element

logger = logging.getLogger(__name__)


class TypeSemigroup:
    """The type map from compact opens to the monoid, with equidecomposition certificates."""

    def __init__(self, algebra: CylinderAlgebra, search: MonoidSearch) -> None:
        self.algebra = algebra
        self.lattice = algebra.lattice
        self.semigroup = self.lattice.semigroup
        self.graph = self.lattice.graph
        self.search = search
        self.presentation = search.presentation

    def vertex_of_epath(self, path: EPath) -> str:
        if isinstance(path.tail, FreeTail):
            return path.prefix.end
        return path.tail.end

    def vertex_of_idempotent(self, element: Element) -> str:
        return self.vertex_of_epath(self.lattice.epath_of(element))

    def typ_of(self, value: CompactOpen) -> MonElem:
        total = self.presentation.zero()
        for path in value:
            total = total + self.presentation.generator(self.vertex_of_epath(path))
        return total

    def connect_idempotents(self, target: Element, source: Element) -> Triple:
        """An element s with s s* = target and s* s = source."""
        first, second = self.lattice.epath_of(target), self.lattice.epath_of(source)
        return self._connect(first, second)

    def _connect(self, first: EPath, second: EPath) -> Triple:
        here, there = self.vertex_of_epath(first), self.vertex_of_epath(second)
        if here != there:
            msg = f"Idempotents sit over different vertices: {here} and {there}"
            raise PreconditionError(msg)
        prime = self.graph.prime_of(first.prefix.end).name
        if isinstance(first.tail, FreeTail) and isinstance(second.tail, FreeTail):
            body: FreeBody | RegularBody = FreeBody(first.tail.exponents, second.tail.exponents)
        elif isinstance(first.tail, PathTail) and isinstance(second.tail, PathTail):
            body = RegularBody(
                first.tail.edges, second.tail.edges, first.prefix.end, second.prefix.end, first.tail.end
            )
        else:
            msg = "Cannot connect a free idempotent with a regular one"
            raise PreconditionError(msg)
        return Triple(first.prefix, Monomial(prime, (), body), second.prefix)

    # Equidecomposition

    def _replay(self, value: CompactOpen, moves: tuple[Move, ...]) -> list[EPath]:
        current = list(value)
        for vertex, index in moves:
            position = next(
                (i for i, path in enumerate(current) if self.vertex_of_epath(path) == vertex), None
            )
            if position is None:
                msg = f"No cylinder over {vertex} left to expand"
                raise PreconditionError(msg)
            choice = index + 1 if self.graph.is_free_vertex(vertex) else None
            logger.debug("expanding %s along class %d", current[position], index)
            current[position : position + 1] = self.lattice.simple_expand_epath(current[position], choice)
        return current

    def equidecompose(
        self, source: CompactOpen, target: CompactOpen, budget: Budget | None = None
    ) -> EquidecompResult:
        """Elements moving the pieces of ``source`` onto the pieces of ``target``."""
        budget = budget or Budget()
        left, right = self.typ_of(source), self.typ_of(target)
        decision = self.search.mon_eq(left, right, budget)
        if decision.verdict is not Verdict.YES:
            return EquidecompResult(decision.verdict, budget_exhausted=decision.budget_exhausted)

        meet = self.search.confluent_meet(left, right, budget)
        if meet is None:
            logger.info("no forward common descendant within the budget")
            return EquidecompResult(Verdict.UNKNOWN, path=decision.path, budget_exhausted=True)

        pieces = self._replay(source, meet.left_moves)
        images = self._replay(target, meet.right_moves)
        pending: dict[str, list[EPath]] = {}
        for path in images:
            pending.setdefault(self.vertex_of_epath(path), []).append(path)
        elements = []
        for path in pieces:
            image = pending[self.vertex_of_epath(path)].pop(0)
            elements.append(self._connect(image, path))

        certificate = EquidecompCertificate(tuple(elements), (1,) * len(elements), source, target)
        if not self.verify_certificate(source, target, certificate):
            msg = "Replayed certificate failed verification"
            raise PreconditionError(msg)
        return EquidecompResult(Verdict.YES, certificate, decision.path)

    def _partitions(self, whole: CompactOpen, parts: list[Element]) -> bool:
        paths = [self.lattice.epath_of(part) for part in parts]
        if any(self.lattice.meet_epaths(a, b) is not None for a, b in combinations(paths, 2)):
            return False
        return self.algebra.equal(self.algebra.as_compact_open(parts), whole)

    def verify_certificate(
        self, source: CompactOpen, target: CompactOpen, certificate: EquidecompCertificate
    ) -> bool:
        sources = [self.semigroup.mul(star(s), s) for s in certificate.elements]
        ranges = [self.semigroup.mul(s, star(s)) for s in certificate.elements]
        return self._partitions(source, sources) and self._partitions(target, ranges)

    def classify_prime_generator(self, vertex: str, budget: Budget | None = None) -> Classification:
        """Free or regular by component, checked against a witness of 2a_v <= a_v."""
        budget = budget or Budget()
        kind = self.graph.prime_of(vertex).kind
        generator = self.presentation.generator(vertex)
        result = self.search.mon_leq(generator.scaled(2), generator, budget)
        found = result.verdict is Verdict.YES
        consistent = found != self.graph.prime_of(vertex).is_free
        return Classification(vertex, kind, consistent, result.z)
