"""Word normal forms straight from the defining relations, one generator at a time.

A word is read left to right and each token is multiplied on the right of a
reduced form gamma . t . body . eta*, kept as plain token lists. The moves are
the relations themselves: e* f is r(e) or 0 inside one separation class,
alpha(p, i) and its star pass the other directions, an alpha meeting a
foreign connector turns into a t-generator at its range, and t-generators
slide along edges, reindexed by i -> i + k(p) - 1 across a free connector.
Nothing here calls the library's multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Optional

from sepgroid.graph.separated_graph import SeparatedGraph
from sepgroid.graph.types import FreeConnector, InternalEdge, Loop

_T_TOKEN = re.compile(r"t:(?P<vertex>.+)\.(?P<index>\d+)(?P<inverse>\^-1)?")

ALPHA, BETA, INTERNAL, CONNECTOR = "alpha", "beta", "internal", "connector"


@dataclass(frozen=True)
class EdgeInfo:
    kind: str
    src: str
    rng: str
    direction: int = 0


@dataclass(frozen=True)
class Reduced:
    start: str
    gamma: tuple[str, ...]
    base: str
    t: tuple[tuple[int, int], ...]
    free: Optional[tuple[tuple[int, int], ...]]
    top: tuple[str, ...] = ()
    bottom: tuple[str, ...] = ()
    end: str = ""
    eta: tuple[str, ...] = ()


State = Optional[Reduced]


class RewritingOracle:
    def __init__(self, graph: SeparatedGraph) -> None:
        self.graph = graph
        self.edges: dict[str, EdgeInfo] = {}
        self.classes: dict[str, int] = {}
        for edge in graph.edges:
            if isinstance(edge, Loop):
                info = EdgeInfo(ALPHA, edge.src, edge.rng, edge.index)
            elif isinstance(edge, FreeConnector):
                info = EdgeInfo(BETA, edge.src, edge.rng, edge.index)
            elif isinstance(edge, InternalEdge):
                info = EdgeInfo(INTERNAL, edge.src, edge.rng)
            else:
                info = EdgeInfo(CONNECTOR, edge.src, edge.rng)
            self.edges[edge.token] = info
        for vertex in graph.vertices:
            for number, members in enumerate(graph.separation_classes(vertex)):
                for edge in members:
                    self.classes[edge.token] = number

    # Reading words

    def normal_word(self, word: str) -> str:
        tokens = word.split()
        state = self.unit(self.source_of(tokens[0]))
        for token in tokens:
            state = self.times(state, token)
            if state is None:
                return "0"
        return self.render(state)

    def source_of(self, token: str) -> str | None:
        if token == "0":
            return None
        if token.startswith("v:"):
            return token[2:]
        match = _T_TOKEN.fullmatch(token)
        if match:
            return match["vertex"]
        if token.endswith("*"):
            return self.edges[token[:-1]].rng
        return self.edges[token].src

    def unit(self, vertex: str | None) -> State:
        if vertex is None:
            return None
        return Reduced(vertex, (), vertex, (), self._free_unit(vertex), end=vertex)

    def _free_unit(self, vertex: str) -> tuple[tuple[int, int], ...] | None:
        if not self.graph.is_free_vertex(vertex):
            return None
        return ((0, 0),) * self.graph.arity(self.graph.prime_of(vertex).name)

    # Right multiplication by one token

    def times(self, state: State, token: str) -> State:
        if state is None or token == "0":
            return None
        here = self._range(state)
        if token.startswith("v:"):
            return state if token[2:] == here else None
        match = _T_TOKEN.fullmatch(token)
        if match:
            if match["vertex"] != here:
                return None
            index = self._carry(state.eta, int(match["index"]))
            return self._with_t(state, index, -1 if match["inverse"] else 1)
        if token.endswith("*"):
            bare = token[:-1]
            if self.edges[bare].rng != here:
                return None
            return self._times_star(state, bare)
        if self.edges[token].src != here:
            return None
        return self._times_edge(state, token)

    def _range(self, state: Reduced) -> str:
        return self.edges[state.eta[0]].src if state.eta else state.end

    def _carry(self, tokens: tuple[str, ...], index: int) -> int:
        """The index of a t-generator after sliding along ``tokens`` towards their range."""
        for token in tokens:
            info = self.edges[token]
            if info.kind == BETA:
                index += self.graph.arity(info.src) - 1
        return index

    @staticmethod
    def _with_t(state: Reduced, index: int, exponent: int) -> Reduced:
        return replace(state, t=_add_t(state.t, [(index, exponent)]))

    @staticmethod
    def _renumber(step_direction: int, other: int) -> int:
        return other if other < step_direction else other - 1

    def _leading_step(self, eta: tuple[str, ...]) -> tuple[int, int]:
        """Direction and alpha-power of the free step eta opens with."""
        power = 0
        while self.edges[eta[power]].kind == ALPHA:
            power += 1
        return self.edges[eta[power]].direction, power

    def _times_edge(self, state: Reduced, token: str) -> State:
        info = self.edges[token]
        if state.eta:
            first = self.edges[state.eta[0]]
            if first.kind in (ALPHA, BETA):
                direction, power = self._leading_step(state.eta)
                if info.kind == ALPHA and info.direction != direction:
                    index = self._carry(state.eta[power + 1 :], self._renumber(direction, info.direction))
                    return self._with_t(state, index, 1)
                if info.kind == ALPHA:
                    return replace(state, eta=state.eta[1:]) if power else None
                return replace(state, eta=state.eta[1:]) if not power and state.eta[0] == token else None
            return self._cancel(state.eta[0], token, lambda: replace(state, eta=state.eta[1:]))

        if state.free is not None:
            body = [list(pair) for pair in state.free]
            if info.kind == ALPHA:
                k, l = body[info.direction - 1]  # noqa: E741
                body[info.direction - 1] = [k, l - 1] if l else [k + 1, l]
                return replace(state, free=tuple((k, l) for k, l in body))
            k, l = body[info.direction - 1]  # noqa: E741
            if l:
                return None
            shift = len(body) - 1
            passed = [
                (self._renumber(info.direction, other), k_other - l_other)
                for other, (k_other, l_other) in enumerate(body, start=1)
                if other != info.direction
            ]
            t = _add_t(tuple((i + shift, e) for i, e in state.t), passed)
            alpha = f"a:{self.graph.prime_of(state.base).name}.{info.direction}"
            return self._advance(state, (alpha,) * k + (token,), t, info.rng)

        if state.bottom:
            nu = state.bottom
            return self._cancel(
                nu[0], token, lambda: replace(state, bottom=nu[1:], end=self.edges[nu[0]].rng)
            )
        if info.kind == INTERNAL:
            return replace(state, top=(*state.top, token), end=info.rng)
        return self._advance(state, (*state.top, token), state.t, info.rng)

    def _advance(self, state: Reduced, steps: tuple[str, ...], t: tuple[tuple[int, int], ...], vertex: str) -> Reduced:
        """Move the monomial across a connector: its letters join gamma and a unit starts at ``vertex``."""
        return Reduced(state.start, (*state.gamma, *steps), vertex, t, self._free_unit(vertex), end=vertex)

    def _cancel(self, mine: str, token: str, survive) -> State:
        if self.classes[mine] != self.classes[token]:
            msg = f"{mine} and {token} leave a regular vertex through different classes"
            raise ValueError(msg)
        return survive() if mine == token else None

    def _times_star(self, state: Reduced, token: str) -> State:
        info = self.edges[token]
        if state.eta:
            if info.kind == ALPHA:
                direction, power = self._leading_step(state.eta)
                if direction != info.direction:
                    index = self._carry(state.eta[power + 1 :], self._renumber(direction, info.direction))
                    return self._with_t(state, index, -1)
            return replace(state, eta=(token, *state.eta))
        if info.kind == ALPHA:
            body = list(state.free)
            k, l = body[info.direction - 1]  # noqa: E741
            body[info.direction - 1] = (k, l + 1)
            return replace(state, free=tuple(body))
        if info.kind == INTERNAL:
            return replace(state, bottom=(token, *state.bottom), end=info.src)
        return replace(state, eta=(token,))

    # Normal words

    def render(self, state: Reduced) -> str:
        tokens = list(state.gamma)
        for index, exponent in state.t:
            suffix = "" if exponent > 0 else "^-1"
            tokens.extend([f"t:{state.base}.{index}{suffix}"] * abs(exponent))
        if state.free is not None:
            prime = self.graph.prime_of(state.base).name
            for direction, (k, l) in enumerate(state.free, start=1):  # noqa: E741
                tokens.extend([f"a:{prime}.{direction}"] * k)
                tokens.extend([f"a:{prime}.{direction}*"] * l)
        tokens.extend(state.top)
        tokens.extend(f"{token}*" for token in reversed(state.bottom))
        tokens.extend(f"{token}*" for token in reversed(state.eta))
        return " ".join(tokens) or f"v:{state.start}"


def _add_t(part: tuple[tuple[int, int], ...], extra) -> tuple[tuple[int, int], ...]:
    total = dict(part)
    for index, exponent in extra:
        total[index] = total.get(index, 0) + exponent
    return tuple(sorted((index, exponent) for index, exponent in total.items() if exponent))
