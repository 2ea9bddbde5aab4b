from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from sepgroid.errors import PreconditionError
from sepgroid.graph.types import InternalEdge
from sepgroid.lattice.types import EPath, FreeTail, PathTail
from sepgroid.semigroup.semigroup import is_idempotent
from sepgroid.semigroup.types import (
    CPath,
    FreeBody,
    FreeStep,
    Monomial,
    RegularBody,
    RegularStep,
    Triple,
    Zero,
)

if TYPE_CHECKING:
    from sepgroid.graph.types import Edge
    from sepgroid.lattice.types import ScriptStep, Tail
    from sepgroid.semigroup.semigroup import Semigroup
    from sepgroid.semigroup.types import Element


class IdempotentLattice:
    """Idempotents of the semigroup, indexed by E-paths."""

    def __init__(self, semigroup: Semigroup) -> None:
        self.semigroup = semigroup
        self.graph = semigroup.graph

    # E-paths <-> idempotents

    def epath_of(self, element: Element) -> EPath:
        if not is_idempotent(element) or not isinstance(element, Triple):
            msg = "Expected a nonzero idempotent"
            raise PreconditionError(msg)
        body = element.mono.body
        if isinstance(body, FreeBody):
            return EPath(element.gamma, FreeTail(body.k))
        return EPath(element.gamma, PathTail(body.gamma, body.meet))

    def idem_of(self, path: EPath) -> Triple:
        prefix, tail = path.prefix, path.tail
        prime = self.graph.prime_of(prefix.end).name
        if isinstance(tail, FreeTail):
            body: FreeBody | RegularBody = FreeBody(tail.exponents, tail.exponents)
        else:
            body = RegularBody(tail.edges, tail.edges, prefix.end, prefix.end, tail.end)
        return Triple(prefix, Monomial(prime, (), body), prefix)

    def trivial_tail(self, vertex: str) -> Tail:
        if self.graph.is_free_vertex(vertex):
            return FreeTail((0,) * self.graph.arity(vertex))
        return PathTail((), vertex)

    def vertex_epath(self, vertex: str) -> EPath:
        return EPath(CPath(vertex), self.trivial_tail(vertex))

    # Order

    def meet(self, left: Element, right: Element) -> Element:
        return self.semigroup.mul(left, right)

    def nat_leq(self, left: Element, right: Element) -> bool:
        return self.semigroup.mul(left, right) == left

    def meet_epaths(self, left: EPath, right: EPath) -> EPath | None:
        product = self.semigroup.mul(self.idem_of(left), self.idem_of(right))
        return None if isinstance(product, Zero) else self.epath_of(product)

    def epath_leq(self, left: EPath, right: EPath) -> bool:
        return self.meet_epaths(left, right) == left

    def join_free(self, left: Element, right: Element) -> Triple:
        first, second = self.epath_of(left), self.epath_of(right)
        if first.prefix != second.prefix:
            msg = "join_free needs idempotents over the same c-path"
            raise PreconditionError(msg)
        if not isinstance(first.tail, FreeTail) or not isinstance(second.tail, FreeTail):
            msg = "join_free needs idempotents ending at a free prime"
            raise PreconditionError(msg)
        exponents = tuple(min(a, b) for a, b in zip(first.tail.exponents, second.tail.exponents))
        return self.idem_of(EPath(first.prefix, FreeTail(exponents)))

    # Children of an E-path

    def free_branch(self, path: EPath, direction: int, power: int, branch: int) -> EPath:
        prime = path.prefix.end
        target = self.graph.free_target(prime, direction, branch)
        step = FreeStep(prime, direction, power, branch, target)
        return EPath(path.prefix.extended(step), self.trivial_tail(target))

    def extend_by_edge(self, path: EPath, edge: Edge) -> EPath:
        tail = path.tail
        if not isinstance(tail, PathTail) or edge.src != tail.end:
            msg = f"Cannot extend {path} by {edge.token}"
            raise PreconditionError(msg)
        if isinstance(edge, InternalEdge):
            return EPath(path.prefix, PathTail((*tail.edges, edge.name), edge.rng))
        prime = self.graph.prime_of(path.prefix.end).name
        step = RegularStep(prime, path.prefix.end, tail.edges, edge.name, edge.rng)
        return EPath(path.prefix.extended(step), self.trivial_tail(edge.rng))

    def out_edge(self, vertex: str, name: str) -> Edge:
        for edge in self.graph.out_edges(vertex):
            if edge.name == name:
                return edge
        msg = f"No edge {name} leaves {vertex}"
        raise PreconditionError(msg)

    def simple_expand_epath(self, path: EPath, choice: int | None = None) -> list[EPath]:
        tail = path.tail
        if isinstance(tail, FreeTail):
            prime = path.prefix.end
            arity = len(tail.exponents)
            if choice is None or not 1 <= choice <= arity:
                msg = f"Free expansion at {prime} needs a direction in 1..{arity}, got {choice}"
                raise PreconditionError(msg)
            exponents = list(tail.exponents)
            power = exponents[choice - 1]
            exponents[choice - 1] += 1
            children = [EPath(path.prefix, FreeTail(tuple(exponents)))]
            children.extend(
                self.free_branch(path, choice, power, branch)
                for branch in range(1, self.graph.branches(prime, choice) + 1)
            )
            return children
        if choice is not None:
            msg = f"Regular expansion takes no direction, got {choice}"
            raise PreconditionError(msg)
        return [self.extend_by_edge(path, edge) for edge in self.graph.out_edges(tail.end)]

    def simple_expand(self, element: Element, choice: int | None = None) -> list[Triple]:
        return [self.idem_of(child) for child in self.simple_expand_epath(self.epath_of(element), choice)]

    def expand_epaths(self, path: EPath, script: Sequence[ScriptStep]) -> list[EPath]:
        current = [path]
        for position, choice in script:
            if not 0 <= position < len(current):
                msg = f"Script position {position} outside 0..{len(current) - 1}"
                raise PreconditionError(msg)
            current[position : position + 1] = self.simple_expand_epath(current[position], choice)
        return current

    def expand(self, element: Element, script: Sequence[ScriptStep]) -> list[Triple]:
        return [self.idem_of(path) for path in self.expand_epaths(self.epath_of(element), script)]
