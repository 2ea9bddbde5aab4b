from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING, Mapping, Sequence

import networkx as nx

from sepgroid.errors import GraphReferenceError
from sepgroid.graph.types import (
    FreeConnector,
    InternalEdge,
    Loop,
    PrimeId,
    PrimeKind,
    RegularConnector,
    Vertex,
)

if TYPE_CHECKING:
    from sepgroid.graph.types import Edge


class SeparatedGraph:
    """A finite separated graph split into free and regular components.

    Values are treated as immutable once built; every derived table is computed
    in the constructor.
    """

    def __init__(
        self,
        name: str,
        primes: Sequence[PrimeId],
        free_targets: Mapping[str, Sequence[Sequence[str]]],
        regular_vertices: Mapping[str, Sequence[str]],
        internal_edges: Sequence[InternalEdge] = (),
        regular_connectors: Sequence[RegularConnector] = (),
    ) -> None:
        self.name = name
        self._primes = tuple(primes)
        self._prime_by_name = {prime.name: prime for prime in self._primes}
        self._free_targets = {p: tuple(tuple(ts) for ts in targets) for p, targets in free_targets.items()}
        self._regular_vertices = {p: tuple(vs) for p, vs in regular_vertices.items()}
        self.internal_edges = tuple(internal_edges)
        self.regular_connectors = tuple(regular_connectors)

        self._vertex_prime: dict[str, str] = {}
        for prime in self._primes:
            names = (prime.name,) if prime.is_free else self._regular_vertices.get(prime.name, ())
            for vertex in names:
                self._vertex_prime[vertex] = prime.name
        self.vertices: tuple[str, ...] = tuple(self._vertex_prime)

        self._out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        self._classes: dict[str, tuple[tuple[Edge, ...], ...]] = {}
        self._named_edges: dict[str, InternalEdge | RegularConnector] = {}

        for prime in self._primes:
            if not prime.is_free:
                continue
            classes = []
            for i, targets in enumerate(self._free_targets.get(prime.name, ()), start=1):
                block: list[Edge] = [Loop(prime.name, i)]
                block.extend(FreeConnector(prime.name, i, t, target) for t, target in enumerate(targets, start=1))
                classes.append(tuple(block))
                self._out[prime.name].extend(block)
            self._classes[prime.name] = tuple(classes)

        for edge in self.internal_edges:
            self._out.setdefault(edge.src, []).append(edge)
            self._named_edges[edge.name] = edge
        for connector in self.regular_connectors:
            self._out.setdefault(connector.src, []).append(connector)
            self._named_edges[connector.name] = connector

        for vertex in self.vertices:
            if not self.is_free(self._vertex_prime[vertex]):
                block = tuple(self._out[vertex])
                self._classes[vertex] = (block,) if block else ()

        self.edges: tuple[Edge, ...] = tuple(edge for v in self.vertices for edge in self._out[v])

        self._digraph = nx.DiGraph()
        self._digraph.add_nodes_from(self.vertices)
        self._digraph.add_edges_from((edge.src, edge.rng) for edge in self.edges if edge.rng in self._vertex_prime)
        self._reach = {v: nx.descendants(self._digraph, v) | {v} for v in self.vertices}

    def __repr__(self) -> str:
        return f"SeparatedGraph({self.name!r}, primes={[p.name for p in self._primes]})"

    @property
    def primes(self) -> tuple[PrimeId, ...]:
        return self._primes

    def prime(self, name: str) -> PrimeId:
        try:
            return self._prime_by_name[name]
        except KeyError:
            msg = f"Unknown prime: {name}"
            raise GraphReferenceError(msg) from None

    def has_vertex(self, name: str) -> bool:
        return name in self._vertex_prime

    def prime_of(self, vertex: str) -> PrimeId:
        try:
            return self._prime_by_name[self._vertex_prime[vertex]]
        except KeyError:
            msg = f"Unknown vertex: {vertex}"
            raise GraphReferenceError(msg) from None

    def vertex(self, name: str) -> Vertex:
        return Vertex(name, self.prime_of(name).name)

    def is_free(self, prime: str) -> bool:
        return self.prime(prime).kind is PrimeKind.FREE

    def is_free_vertex(self, vertex: str) -> bool:
        return self.prime_of(vertex).is_free

    def component_vertices(self, prime: str) -> tuple[str, ...]:
        if self.is_free(prime):
            return (prime,)
        return self._regular_vertices.get(prime, ())

    # Free primes

    def arity(self, prime: str) -> int:
        """k(p): the number of loops at a free prime."""
        return len(self._free_targets.get(prime, ()))

    def branches(self, prime: str, index: int) -> int:
        """g(p, i): the number of connectors in the class X_i."""
        return len(self._free_targets[prime][index - 1])

    def free_target(self, prime: str, index: int, branch: int) -> str:
        return self._free_targets[prime][index - 1][branch - 1]

    def free_targets(self, prime: str) -> tuple[tuple[str, ...], ...]:
        return self._free_targets.get(prime, ())

    def loop(self, prime: str, index: int) -> Loop:
        if not self.is_free(prime) or not 1 <= index <= self.arity(prime):
            msg = f"Loop index out of range: a:{prime}.{index}"
            raise GraphReferenceError(msg)
        return Loop(prime, index)

    def free_connector(self, prime: str, index: int, branch: int) -> FreeConnector:
        if not self.is_free(prime) or not 1 <= index <= self.arity(prime):
            msg = f"Connector index out of range: b:{prime}.{index}.{branch}"
            raise GraphReferenceError(msg)
        if not 1 <= branch <= self.branches(prime, index):
            msg = f"Connector branch out of range: b:{prime}.{index}.{branch}"
            raise GraphReferenceError(msg)
        return FreeConnector(prime, index, branch, self.free_target(prime, index, branch))

    # Regular primes

    def regular_vertices(self, prime: str) -> tuple[str, ...]:
        return self._regular_vertices.get(prime, ())

    def named_edge(self, name: str) -> InternalEdge | RegularConnector:
        try:
            return self._named_edges[name]
        except KeyError:
            msg = f"Unknown edge: {name}"
            raise GraphReferenceError(msg) from None

    def has_named_edge(self, name: str) -> bool:
        return name in self._named_edges

    def out_edges(self, vertex: str) -> tuple[Edge, ...]:
        return tuple(self._out.get(vertex, ()))

    def internal_out(self, vertex: str) -> tuple[InternalEdge, ...]:
        return tuple(edge for edge in self._out.get(vertex, ()) if isinstance(edge, InternalEdge))

    def separation_classes(self, vertex: str) -> tuple[tuple[Edge, ...], ...]:
        """The partition C_v of the edges leaving a vertex."""
        return self._classes.get(vertex, ())

    # Order on components

    def vertex_digraph(self) -> nx.DiGraph:
        return self._digraph.copy()

    def reachable(self, source: str, target: str) -> bool:
        return target in self._reach[source]

    def component_leq(self, p: str, q: str) -> bool:
        """True when q <= p, i.e. some vertex of q is reachable from p."""
        self.prime(p)
        self.prime(q)
        if p == q:
            return True
        return any(
            target in self._reach[source]
            for source in self.component_vertices(p)
            for target in self.component_vertices(q)
        )

    def hereditary_subsets(self) -> list[frozenset[str]]:
        names = [prime.name for prime in self._primes]
        below = {p: {q for q in names if self.component_leq(p, q)} for p in names}
        found = []
        for size in range(len(names) + 1):
            for subset in combinations(names, size):
                chosen = set(subset)
                if all(below[p] <= chosen for p in chosen):
                    found.append(frozenset(chosen))
        return found

    def composition_series(self) -> list[frozenset[str]]:
        """A maximal chain of hereditary subsets adding one prime at a time."""
        names = [prime.name for prime in self._primes]
        order = nx.DiGraph()
        order.add_nodes_from(names)
        order.add_edges_from((q, p) for p in names for q in names if p != q and self.component_leq(p, q))
        series = [frozenset()]
        current: set[str] = set()
        for prime in nx.lexicographical_topological_sort(order, key=names.index):
            current.add(prime)
            series.append(frozenset(current))
        return series
