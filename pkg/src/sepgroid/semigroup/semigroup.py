from __future__ import annotations

from dataclasses import replace
from typing import TYPE_CHECKING

from sepgroid.errors import PreconditionError
from sepgroid.semigroup.tparts import t_add, t_from_pairs, t_negate, t_shift
from sepgroid.semigroup.types import (
    ZERO,
    CPath,
    FreeBody,
    FreeStep,
    Monomial,
    RegularBody,
    RegularStep,
    TMonomial,
    Triple,
    Zero,
)

if TYPE_CHECKING:
    from collections.abc import Iterable

    from sepgroid.graph.separated_graph import SeparatedGraph
    from sepgroid.semigroup.types import Element, Step, TPart


def star_monomial(mono: Monomial) -> Monomial:
    body = mono.body
    if isinstance(body, FreeBody):
        flipped: FreeBody | RegularBody = FreeBody(body.l, body.k)
    else:
        flipped = RegularBody(body.nu, body.gamma, body.end, body.start, body.meet)
    return Monomial(mono.prime, t_negate(mono.t), flipped)


def star(element: Element) -> Element:
    if isinstance(element, Zero):
        return ZERO
    return Triple(element.eta, star_monomial(element.mono), element.gamma)


def with_t(mono: Monomial, part: TPart) -> Monomial:
    """Multiply a monomial by a pure-t monomial based at its range (or source)."""
    return replace(mono, t=t_add(mono.t, part))


def is_idempotent(element: Element) -> bool:
    if isinstance(element, Zero):
        return False
    if element.gamma != element.eta or element.mono.t:
        return False
    body = element.mono.body
    if isinstance(body, FreeBody):
        return body.k == body.l
    return body.gamma == body.nu


def endpoints(element: Element) -> tuple[str, str]:
    if isinstance(element, Zero):
        msg = "Zero has no endpoints"
        raise PreconditionError(msg)
    return element.gamma.start, element.eta.start


class Semigroup:
    """Normal-form arithmetic in the inverse semigroup of a separated graph."""

    def __init__(self, graph: SeparatedGraph) -> None:
        self.graph = graph

    def identity_monomial(self, vertex: str) -> Monomial:
        prime = self.graph.prime_of(vertex)
        if prime.is_free:
            zeros = (0,) * self.graph.arity(prime.name)
            return Monomial(prime.name, (), FreeBody(zeros, zeros))
        return Monomial(prime.name, (), RegularBody((), (), vertex, vertex, vertex))

    def vertex_element(self, vertex: str) -> Triple:
        return Triple(CPath(vertex), self.identity_monomial(vertex), CPath(vertex))

    def star(self, element: Element) -> Element:
        return star(element)

    def mul_monomials(self, left: Monomial, right: Monomial) -> Monomial | Zero:
        if left.prime != right.prime:
            msg = f"Monomials live at different primes: {left.prime} and {right.prime}"
            raise PreconditionError(msg)
        if left.range != right.source:
            msg = f"Monomial endpoints do not match: {left.range} and {right.source}"
            raise PreconditionError(msg)

        t = t_add(left.t, right.t)
        lb, rb = left.body, right.body
        if isinstance(lb, FreeBody) and isinstance(rb, FreeBody):
            k = tuple(max(k1, k1 + k2 - l1) for k1, k2, l1 in zip(lb.k, rb.k, lb.l))
            l = tuple(max(l2, l2 + l1 - k2) for l2, l1, k2 in zip(rb.l, lb.l, rb.k))  # noqa: E741
            return Monomial(left.prime, t, FreeBody(k, l))

        if not isinstance(lb, RegularBody) or not isinstance(rb, RegularBody):
            msg = "Cannot multiply a free monomial with a regular one"
            raise PreconditionError(msg)
        if rb.gamma[: len(lb.nu)] == lb.nu:
            tail = rb.gamma[len(lb.nu) :]
            body = RegularBody(lb.gamma + tail, rb.nu, lb.start, rb.end, rb.meet)
        elif lb.nu[: len(rb.gamma)] == rb.gamma:
            tail = lb.nu[len(rb.gamma) :]
            body = RegularBody(lb.gamma, rb.nu + tail, lb.start, rb.end, lb.meet)
        else:
            return ZERO
        return Monomial(left.prime, t, body)

    def push_t(self, part: TPart, steps: Iterable[Step]) -> TPart:
        """Carry pure t-exponents rightwards through a run of steps."""
        for step in steps:
            if isinstance(step, FreeStep):
                part = t_shift(part, self.graph.arity(step.prime) - 1)
        return part

    def translate(self, mono: Monomial, eta: CPath) -> tuple[CPath, TMonomial] | Zero:
        """Rewrite m * eta as eta~ * phi with phi a pure-t monomial at r(eta)."""
        if eta.start != mono.range:
            msg = f"c-path starts at {eta.start} but the monomial ends at {mono.range}"
            raise PreconditionError(msg)
        if eta.is_trivial:
            if not mono.is_pure_t:
                msg = "translate along a trivial c-path needs a pure-t monomial"
                raise PreconditionError(msg)
            return eta, TMonomial(eta.end, mono.t)

        first, rest = eta.steps[0], eta.steps[1:]
        body = mono.body
        if isinstance(body, FreeBody):
            if not isinstance(first, FreeStep) or first.prime != mono.prime:
                msg = "a free monomial must be followed by a step of its own prime"
                raise PreconditionError(msg)
            i = first.direction
            if body.l[i - 1] > first.power:
                return ZERO
            moved: Step = replace(first, power=body.k[i - 1] + first.power - body.l[i - 1])
            arity = len(body.k)
            pairs = [
                (j if j < i else j - 1, body.k[j - 1] - body.l[j - 1]) for j in range(1, arity + 1) if j != i
            ]
            part = t_from_pairs((*pairs, *t_shift(mono.t, arity - 1)))
        else:
            if not isinstance(first, RegularStep):
                msg = "a regular monomial must be followed by a regular step"
                raise PreconditionError(msg)
            if first.path[: len(body.nu)] != body.nu:
                return ZERO
            remainder = first.path[len(body.nu) :]
            moved = RegularStep(first.prime, body.start, body.gamma + remainder, first.connector, first.target)
            part = mono.t

        return CPath(mono.source, (moved, *rest)), TMonomial(eta.end, self.push_t(part, rest))

    def mul(self, left: Element, right: Element) -> Element:
        if isinstance(left, Zero) or isinstance(right, Zero):
            return ZERO

        if left.eta == right.gamma:
            mono = self.mul_monomials(left.mono, right.mono)
            if isinstance(mono, Zero):
                return ZERO
            return Triple(left.gamma, mono, right.eta)

        rest = right.gamma.strip_prefix(left.eta)
        if rest is not None:
            moved = self.translate(left.mono, rest)
            if isinstance(moved, Zero):
                return ZERO
            tilde, phi = moved
            return Triple(left.gamma.then(tilde), with_t(right.mono, phi.t), right.eta)

        rest = left.eta.strip_prefix(right.gamma)
        if rest is not None:
            moved = self.translate(star_monomial(right.mono), rest)
            if isinstance(moved, Zero):
                return ZERO
            tilde, phi = moved
            return Triple(left.gamma, with_t(left.mono, t_negate(phi.t)), right.eta.then(tilde))

        return ZERO

    def product(self, elements: Iterable[Element]) -> Element:
        result: Element | None = None
        for element in elements:
            result = element if result is None else self.mul(result, element)
        if result is None:
            msg = "Cannot multiply an empty sequence"
            raise PreconditionError(msg)
        return result

    def are_orthogonal(self, left: Element, right: Element) -> bool:
        return isinstance(self.mul(star(left), right), Zero) and isinstance(self.mul(right, star(left)), Zero)
