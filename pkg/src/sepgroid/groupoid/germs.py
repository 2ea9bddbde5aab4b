from __future__ import annotations

import math
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

from sepgroid.errors import PreconditionError
from sepgroid.filters.literals import format_path
from sepgroid.filters.types import ExtendedFreeTail, RegularPeriodicTail, SemifinitePath
from sepgroid.groupoid.types import Germ, GermWeight, trimmed
from sepgroid.lattice.types import CompactOpen, EPath, FreeTail, PathTail
from sepgroid.semigroup.semigroup import star
from sepgroid.semigroup.types import FreeBody, Triple, Zero

if TYPE_CHECKING:
    from sepgroid.filters.correspondence import FilterCorrespondence
    from sepgroid.filters.types import InfinitePath
    from sepgroid.lattice.cylinders import CylinderAlgebra
    from sepgroid.semigroup.types import Element, TPart


def norm_length(path: EPath) -> tuple[int, ...]:
    """|gamma|_inf: per-direction lengths at a free end, total length at a regular end."""
    depth_length = path.prefix.length
    if isinstance(path.tail, FreeTail):
        return trimmed(exponent + depth_length for exponent in path.tail.exponents)
    return trimmed((depth_length + len(path.tail.edges),))


def _dense(part: TPart) -> tuple[int, ...]:
    if not part:
        return ()
    values = [0] * max(index for index, _ in part)
    for index, exponent in part:
        values[index - 1] = exponent
    return trimmed(values)


def compose(first: Germ, second: Germ) -> Germ:
    if first.y != second.x:
        msg = f"Germs do not compose: {format_path(first.y)} differs from {format_path(second.x)}"
        raise PreconditionError(msg)
    return Germ(first.x, first.weight + second.weight, second.y)


def inverse(germ: Germ) -> Germ:
    witness = None if germ.witness is None else (germ.witness[1], germ.witness[0])
    return Germ(germ.y, -germ.weight, germ.x, witness)


def unit(point: InfinitePath) -> Germ:
    return Germ(point, GermWeight(), point)


def cocycle(germ: Germ) -> tuple[int, ...]:
    return germ.weight.n1


def format_germ(germ: Germ) -> str:
    n1 = ",".join(map(str, germ.weight.n1))
    n2 = ",".join(map(str, germ.weight.n2))
    return f"({format_path(germ.x)} ; ({n1}) ; ({n2}) ; {format_path(germ.y)})"


class Groupoid:
    """Germs of semigroup elements acting on infinite paths."""

    def __init__(self, filters: FilterCorrespondence, algebra: CylinderAlgebra) -> None:
        self.filters = filters
        self.algebra = algebra
        self.lattice = filters.lattice
        self.semigroup = self.lattice.semigroup

    def germ_of(self, element: Element, point: InfinitePath) -> Germ:
        if isinstance(element, Zero):
            msg = "Zero has no germs"
            raise PreconditionError(msg)
        if not point.is_infinite:
            msg = "Germs are taken at infinite paths"
            raise PreconditionError(msg)
        if not self.filters.filter_contains(point, self.semigroup.mul(star(element), element)):
            msg = "The point lies outside the source cylinder of the element"
            raise PreconditionError(msg)

        anchor = self.lattice.idem_of(EPath(point.prefix, self.lattice.trivial_tail(point.prefix.end)))
        reduced = self.semigroup.mul(element, anchor)
        if not isinstance(reduced, Triple) or reduced.eta != point.prefix:
            msg = "Reduction against the prefix of the point failed"
            raise PreconditionError(msg)

        gamma, mono, nu = reduced.gamma, reduced.mono, reduced.eta
        body = mono.body
        n1 = _dense(mono.t)
        if isinstance(body, FreeBody):
            image = SemifinitePath(gamma, ExtendedFreeTail((math.inf,) * len(body.k)))
            n2 = trimmed(gamma.length + k - l - nu.length for k, l in zip(body.k, body.l))
            witness = (EPath(gamma, FreeTail(body.k)), EPath(nu, FreeTail(body.l)))
        else:
            tail = point.tail
            if not isinstance(tail, RegularPeriodicTail) or tail.first_edges(len(body.nu)) != body.nu:
                msg = "The point does not continue the path pair of the element"
                raise PreconditionError(msg)
            rest = tail.dropped(len(body.nu))
            image = SemifinitePath(gamma, RegularPeriodicTail.of(body.gamma + rest.rho, rest.cycle))
            n2 = trimmed((gamma.length + len(body.gamma) - len(body.nu) - nu.length,))
            witness = (
                EPath(gamma, PathTail(body.gamma, body.meet)),
                EPath(nu, PathTail(body.nu, body.meet)),
            )
        return Germ(image, GermWeight(n1, n2), point, witness)

    def in_bisection(self, germ: Germ, element: Element) -> bool:
        if isinstance(element, Zero):
            return False
        if not self.filters.filter_contains(germ.y, self.semigroup.mul(star(element), element)):
            return False
        return self.germ_of(element, germ.y) == germ

    def bisection_endpoints(self, element: Element) -> tuple[CompactOpen, CompactOpen]:
        if isinstance(element, Zero):
            msg = "Zero has no bisection"
            raise PreconditionError(msg)
        source = self.semigroup.mul(star(element), element)
        target = self.semigroup.mul(element, star(element))
        return self.algebra.cylinder(source), self.algebra.cylinder(target)

    def is_bisection_family(self, elements: Sequence[Element]) -> bool:
        ends = [self.bisection_endpoints(element) for element in elements if not isinstance(element, Zero)]
        return all(
            self.algebra.are_disjoint(a[0], b[0]) and self.algebra.are_disjoint(a[1], b[1])
            for a, b in combinations(ends, 2)
        )
