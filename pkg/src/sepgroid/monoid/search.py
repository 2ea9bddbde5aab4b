from __future__ import annotations

import logging
from dataclasses import replace
from itertools import combinations_with_replacement, product
from typing import TYPE_CHECKING, Iterator

from sepgroid.budgets import Budget
from sepgroid.errors import PreconditionError
from sepgroid.monoid.types import (
    EqResult,
    LeqResult,
    MeetResult,
    MonElem,
    RefinementResult,
    Verdict,
)

if TYPE_CHECKING:
    from sepgroid.monoid.types import Move, Presentation

logger = logging.getLogger(__name__)


def _trace(parents: dict[MonElem, MonElem | None], state: MonElem) -> list[MonElem]:
    path = [state]
    parent = parents[state]
    while parent is not None:
        path.append(parent)
        parent = parents[parent]
    return path


class MonoidSearch:
    """Bounded searches in the commutative monoid of a presentation."""

    def __init__(self, presentation: Presentation) -> None:
        self.presentation = presentation
        self._classes: dict[tuple[MonElem, Budget], tuple[frozenset[MonElem], bool]] = {}

    def neighbours(self, state: MonElem) -> Iterator[MonElem]:
        """Every state one relation away, in either direction."""
        for relation in self.presentation.relations:
            if state.dominates(relation.lhs):
                yield state - relation.lhs + relation.rhs
            if state.dominates(relation.rhs):
                yield state - relation.rhs + relation.lhs

    def forward_moves(self, state: MonElem) -> Iterator[tuple[Move, MonElem]]:
        for relation in self.presentation.relations:
            if state.dominates(relation.lhs):
                yield (relation.vertex, relation.index), state - relation.lhs + relation.rhs

    # Word problem

    def mon_eq(self, left: MonElem, right: MonElem, budget: Budget | None = None) -> EqResult:
        """Bidirectional breadth-first search between the two sides.

        No is returned only when one side's class was explored completely, without
        hitting the weight cap.
        """
        budget = budget or Budget()
        if left == right:
            return EqResult(Verdict.YES, (left,))

        parents: tuple[dict[MonElem, MonElem | None], dict[MonElem, MonElem | None]] = ({left: None}, {right: None})
        frontiers = [[left], [right]]
        pruned = [False, False]
        visited = 2
        while frontiers[0] or frontiers[1]:
            side = 0 if frontiers[0] and (not frontiers[1] or len(frontiers[0]) <= len(frontiers[1])) else 1
            own, other = parents[side], parents[1 - side]
            layer = []
            for state in frontiers[side]:
                for neighbour in self.neighbours(state):
                    if neighbour.weight > budget.max_weight:
                        pruned[side] = True
                        continue
                    if neighbour in own:
                        continue
                    own[neighbour] = state
                    if neighbour in other:
                        path = list(reversed(_trace(parents[0], neighbour))) + _trace(parents[1], neighbour)[1:]
                        logger.debug("mon_eq met after %d states", visited)
                        return EqResult(Verdict.YES, tuple(path))
                    layer.append(neighbour)
                    visited += 1
                    if visited >= budget.max_steps:
                        logger.info("mon_eq stopped after %d states", visited)
                        return EqResult(Verdict.UNKNOWN, budget_exhausted=True)
            frontiers[side] = layer
            if not layer and not pruned[side]:
                logger.debug("class of side %d exhausted with %d states", side, len(own))
                return EqResult(Verdict.NO)
        logger.info("both classes hit the weight cap %d", budget.max_weight)
        return EqResult(Verdict.UNKNOWN, budget_exhausted=True)

    def mon_class(self, value: MonElem, budget: Budget | None = None) -> tuple[frozenset[MonElem], bool]:
        """The states equivalent to ``value`` within the budget, and whether that set is complete."""
        budget = budget or Budget()
        key = (value, budget)
        if key not in self._classes:
            seen = {value}
            frontier = [value]
            complete = True
            while frontier:
                layer = []
                for state in frontier:
                    for neighbour in self.neighbours(state):
                        if neighbour.weight > budget.max_weight:
                            complete = False
                        elif neighbour not in seen:
                            seen.add(neighbour)
                            layer.append(neighbour)
                if len(seen) >= budget.max_steps:
                    complete = False
                    break
                frontier = layer
            self._classes[key] = (frozenset(seen), complete)
        return self._classes[key]

    # Order

    def elements_up_to(self, weight: int) -> Iterator[MonElem]:
        """All vectors of total weight at most ``weight``, lightest first."""
        size = len(self.presentation.vertices)
        for total in range(weight + 1):
            for chosen in combinations_with_replacement(range(size), total):
                counts = [0] * size
                for index in chosen:
                    counts[index] += 1
                yield MonElem(tuple(counts))

    def mon_leq(self, left: MonElem, right: MonElem, budget: Budget | None = None) -> LeqResult:
        budget = budget or Budget()
        exhausted = False
        for z in self.elements_up_to(budget.max_z_weight):
            result = self.mon_eq(left + z, right, budget)
            if result.verdict is Verdict.YES:
                return LeqResult(Verdict.YES, z)
            exhausted = exhausted or result.budget_exhausted
        return LeqResult(Verdict.UNKNOWN, budget_exhausted=exhausted)

    # Refinement

    def refinement_witness(
        self, a: MonElem, b: MonElem, c: MonElem, d: MonElem, budget: Budget | None = None
    ) -> RefinementResult:
        """w, x, y, z with a = w + x, b = y + z, c = w + y and d = x + z."""
        budget = budget or Budget()
        if self.mon_eq(a + b, c + d, budget).verdict is not Verdict.YES:
            msg = "a + b = c + d could not be verified within the budget"
            raise PreconditionError(msg)
        if a + b == c + d:
            return RefinementResult(Verdict.YES, self._literal_refinement(a, b, c, d))

        local = replace(budget, max_weight=min(budget.max_weight, (a + b).weight + budget.max_z_weight))
        classes = [self.mon_class(value, local)[0] for value in (a, b, c, d)]
        sums = {}
        for c_rep, d_rep in product(sorted(classes[2], key=_order), sorted(classes[3], key=_order)):
            sums.setdefault(c_rep + d_rep, (c_rep, d_rep))
        for a_rep, b_rep in product(sorted(classes[0], key=_order), sorted(classes[1], key=_order)):
            found = sums.get(a_rep + b_rep)
            if found is not None:
                logger.debug("refinement through representatives %s %s", a_rep, b_rep)
                return RefinementResult(Verdict.YES, self._literal_refinement(a_rep, b_rep, *found))

        witness = self._search_refinement(a, b, c, d, budget)
        if witness is not None:
            return RefinementResult(Verdict.YES, witness)
        return RefinementResult(Verdict.UNKNOWN, budget_exhausted=True)

    @staticmethod
    def _literal_refinement(
        a: MonElem, b: MonElem, c: MonElem, d: MonElem
    ) -> tuple[MonElem, MonElem, MonElem, MonElem]:
        w = a.minimum(c)
        x = a - w
        y = c - w
        z = b - y
        return w, x, y, z

    def _search_refinement(
        self, a: MonElem, b: MonElem, c: MonElem, d: MonElem, budget: Budget
    ) -> tuple[MonElem, MonElem, MonElem, MonElem] | None:
        candidates = list(self.elements_up_to(budget.max_z_weight))

        def equal(left: MonElem, right: MonElem) -> bool:
            return self.mon_eq(left, right, budget).verdict is Verdict.YES

        for w, x in product(candidates, repeat=2):
            if not equal(w + x, a):
                continue
            for y in candidates:
                if not equal(w + y, c):
                    continue
                for z in candidates:
                    if equal(y + z, b) and equal(x + z, d):
                        return w, x, y, z
        return None

    # Forward rewriting

    def confluent_meet(self, left: MonElem, right: MonElem, budget: Budget | None = None) -> MeetResult | None:
        """A common descendant under forward rewrites only, with the moves reaching it."""
        budget = budget or Budget()
        moves: tuple[dict[MonElem, tuple[Move, ...]], dict[MonElem, tuple[Move, ...]]] = ({left: ()}, {right: ()})
        if left == right:
            return MeetResult(left, (), ())
        frontiers = [[left], [right]]
        visited = 2
        while frontiers[0] or frontiers[1]:
            side = 0 if frontiers[0] and (not frontiers[1] or len(frontiers[0]) <= len(frontiers[1])) else 1
            own, other = moves[side], moves[1 - side]
            layer = []
            for state in frontiers[side]:
                for move, child in self.forward_moves(state):
                    if child.weight > budget.max_weight or child in own:
                        continue
                    own[child] = (*own[state], move)
                    if child in other:
                        return MeetResult(child, moves[0][child], moves[1][child])
                    layer.append(child)
                    visited += 1
                    if visited >= budget.max_steps:
                        logger.info("confluent_meet stopped after %d states", visited)
                        return None
            frontiers[side] = layer
        return None


def _order(value: MonElem) -> tuple[int, tuple[int, ...]]:
    return (value.weight, value.counts)
