from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import TYPE_CHECKING, Collection, Sequence

from sepgroid.budgets import Bounds
from sepgroid.errors import PreconditionError
from sepgroid.filters.types import (
    ExtendedFreeTail,
    RegularPeriodicTail,
    RegularTail,
    SemifinitePath,
)
from sepgroid.lattice.types import EPath, FreeTail, PathTail
from sepgroid.semigroup.semigroup import is_idempotent
from sepgroid.semigroup.types import FreeStep, RegularStep, Zero

if TYPE_CHECKING:
    from sepgroid.lattice.idempotents import IdempotentLattice
    from sepgroid.semigroup.types import Element, Triple

logger = logging.getLogger(__name__)


class FilterCorrespondence:
    """Semifinite paths as filters of the idempotent lattice."""

    def __init__(self, lattice: IdempotentLattice) -> None:
        self.lattice = lattice
        self.graph = lattice.graph

    # Membership

    def is_initial_segment(self, segment: EPath, path: SemifinitePath) -> bool:
        rest = path.prefix.strip_prefix(segment.prefix)
        if rest is None:
            return False
        short, long = segment.tail, path.tail

        if rest.is_trivial:
            if isinstance(short, FreeTail) and isinstance(long, ExtendedFreeTail):
                return all(a <= b for a, b in zip(short.exponents, long.exponents))
            if isinstance(short, PathTail) and isinstance(long, RegularTail):
                return long.edges[: len(short.edges)] == short.edges
            if isinstance(short, PathTail) and isinstance(long, RegularPeriodicTail):
                return long.first_edges(len(short.edges)) == short.edges
            return False

        step = rest.steps[0]
        if isinstance(short, FreeTail) and isinstance(step, FreeStep):
            return short.exponents[step.direction - 1] <= step.power
        if isinstance(short, PathTail) and isinstance(step, RegularStep):
            return step.path[: len(short.edges)] == short.edges
        return False

    def filter_contains(self, path: SemifinitePath, element: Element) -> bool:
        """True when the idempotent lies in the filter of the path."""
        if isinstance(element, Zero) or not is_idempotent(element):
            msg = "Filter membership is defined for nonzero idempotents"
            raise PreconditionError(msg)
        return self.is_initial_segment(self.lattice.epath_of(element), path)

    def trace(self, path: SemifinitePath, candidates: Sequence[EPath]) -> frozenset[EPath]:
        return frozenset(candidate for candidate in candidates if self.is_initial_segment(candidate, path))

    # Points

    def is_ultrafilter(self, path: SemifinitePath) -> bool:
        return path.is_infinite

    def terminal_prime(self, path: SemifinitePath) -> str:
        return self.graph.prime_of(path.prefix.end).name

    def in_invariant_open(self, path: SemifinitePath, hereditary: Collection[str]) -> bool:
        return self.terminal_prime(path) in hereditary

    def as_epath(self, path: SemifinitePath) -> EPath | None:
        """The E-path of a semifinite path with finite data, else None."""
        tail = path.tail
        if isinstance(tail, ExtendedFreeTail):
            if any(exponent == math.inf for exponent in tail.exponents):
                return None
            return EPath(path.prefix, FreeTail(tuple(int(exponent) for exponent in tail.exponents)))
        if isinstance(tail, RegularTail):
            return EPath(path.prefix, PathTail(tail.edges, tail.end))
        return None

    def of_epath(self, path: EPath) -> SemifinitePath:
        if isinstance(path.tail, FreeTail):
            return SemifinitePath(path.prefix, ExtendedFreeTail(path.tail.exponents))
        return SemifinitePath(path.prefix, RegularTail(path.tail.edges, path.tail.end))

    # Filters back to paths

    def reconstruct_path(self, family: Sequence[Element], bounds: Bounds | None = None) -> SemifinitePath:
        """The smallest semifinite path whose filter holds every idempotent of the family.

        The answer is the exact supremum. With ``bounds`` given, a family whose
        supremum has an exponent above ``max_exp`` or a tail longer than
        ``max_len`` is rejected.
        """
        if not family:
            msg = "Cannot reconstruct a path from an empty family"
            raise PreconditionError(msg)
        for element in family:
            if isinstance(element, Zero) or not is_idempotent(element):
                msg = "A filter base holds nonzero idempotents only"
                raise PreconditionError(msg)
        paths = [self.lattice.epath_of(element) for element in family]
        for first, second in combinations(paths, 2):
            if self.lattice.meet_epaths(first, second) is None:
                msg = f"Family is not directed: {first} and {second} have zero meet"
                raise PreconditionError(msg)

        supremum = self._supremum(paths)
        if bounds is not None and not _within(supremum, bounds):
            msg = f"Supremum {supremum} lies outside the bound {bounds}"
            raise PreconditionError(msg)
        return self.of_epath(supremum)

    def path_of_trace(self, trace: Collection[EPath], bounds: Bounds) -> SemifinitePath:
        """Invert ``trace`` over ``epaths(graph, bounds)``.

        A bounded trace cannot tell an exponent of ``max_exp`` from an infinite
        one, so exponents at the bound are read as infinite, matching
        ``semifinite_paths``. Tails at ``max_len`` are matched against a short
        periodic description.
        """
        if not trace:
            msg = "Cannot reconstruct a path from an empty trace"
            raise PreconditionError(msg)
        supremum = self._supremum(list(trace))
        tail = supremum.tail
        if isinstance(tail, FreeTail):
            exponents = tuple(math.inf if value >= bounds.max_exp else value for value in tail.exponents)
            return SemifinitePath(supremum.prefix, ExtendedFreeTail(exponents))
        if len(tail.edges) >= bounds.max_len:
            periodic = self._periodic_description(tail.edges)
            if periodic is not None:
                return SemifinitePath(supremum.prefix, periodic)
            logger.debug("no periodic description found for %s", tail)
        return self.of_epath(supremum)

    def _supremum(self, paths: Sequence[EPath]) -> EPath:
        deepest = max(paths, key=lambda path: path.prefix.depth)
        prefix = deepest.prefix
        for path in paths:
            if not prefix.has_prefix(path.prefix):
                msg = f"Prefixes of {path} and {deepest} are not nested"
                raise PreconditionError(msg)
        tails = [path.tail for path in paths if path.prefix == prefix]
        free_tails = [tail for tail in tails if isinstance(tail, FreeTail)]
        if free_tails:
            columns = zip(*(tail.exponents for tail in free_tails))
            return EPath(prefix, FreeTail(tuple(max(column) for column in columns)))
        path_tails = [tail for tail in tails if isinstance(tail, PathTail)]
        longest = max(path_tails, key=lambda tail: len(tail.edges))
        for tail in path_tails:
            if longest.edges[: len(tail.edges)] != tail.edges:
                msg = f"Tails {tail} and {longest} are not nested"
                raise PreconditionError(msg)
        return EPath(prefix, longest)

    def _periodic_description(self, edges: tuple[str, ...]) -> RegularPeriodicTail | None:
        for size in range(1, len(edges) // 3 + 1):
            for cycle_length in range(1, size + 1):
                rho = edges[: size - cycle_length]
                cycle = edges[size - cycle_length : size]
                if self.graph.named_edge(cycle[-1]).rng != self.graph.named_edge(cycle[0]).src:
                    continue
                candidate = RegularPeriodicTail.of(rho, cycle)
                if candidate.first_edges(len(edges)) == edges:
                    return candidate
        return None

    # Tightness

    def separation_witness(self, path: SemifinitePath) -> tuple[list[Triple], list[Triple]]:
        """Finite sets X, Y with the path's filter holding X and every infinite path near it avoiding Y.

        The lone point of a sink such as ``v:p`` in a free prime with no
        directions is infinite, so it is rejected instead of answering X={p}, Y=().
        """
        if path.is_infinite:
            msg = "Infinite paths are ultrafilters and have no separation witness"
            raise PreconditionError(msg)
        tail = path.tail
        if isinstance(tail, RegularTail):
            base = EPath(path.prefix, PathTail(tail.edges, tail.end))
            extensions = [self.lattice.extend_by_edge(base, edge) for edge in self.graph.out_edges(tail.end)]
            return [self.lattice.idem_of(base)], [self.lattice.idem_of(extension) for extension in extensions]
        if not isinstance(tail, ExtendedFreeTail):
            msg = "Periodic regular tails are infinite"
            raise PreconditionError(msg)

        direction = next(j for j, exponent in enumerate(tail.exponents, start=1) if exponent != math.inf)
        power = int(tail.exponents[direction - 1])
        exponents = tuple(power if j == direction else 0 for j in range(1, len(tail.exponents) + 1))
        segment = EPath(path.prefix, FreeTail(exponents))
        bumped = tuple(value + 1 if j == direction else value for j, value in enumerate(exponents, start=1))
        avoid = [EPath(path.prefix, FreeTail(bumped))]
        avoid.extend(
            self.lattice.free_branch(segment, direction, power, branch)
            for branch in range(1, self.graph.branches(path.prefix.end, direction) + 1)
        )
        return [self.lattice.idem_of(segment)], [self.lattice.idem_of(item) for item in avoid]


def _within(path: EPath, bounds: Bounds) -> bool:
    if isinstance(path.tail, FreeTail):
        exponents_ok = all(value <= bounds.max_exp for value in path.tail.exponents)
    else:
        exponents_ok = len(path.tail.edges) <= bounds.max_len
    steps_ok = all(
        step.power <= bounds.max_exp if isinstance(step, FreeStep) else len(step.path) <= bounds.max_len
        for step in path.prefix.steps
    )
    return exponents_ok and steps_ok
