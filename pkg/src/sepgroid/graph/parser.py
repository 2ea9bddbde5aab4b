from __future__ import annotations

import re
from typing import TYPE_CHECKING

from sepgroid.errors import GraphReferenceError, GraphSyntaxError
from sepgroid.graph.separated_graph import SeparatedGraph
from sepgroid.graph.types import InternalEdge, PrimeId, PrimeKind, RegularConnector

if TYPE_CHECKING:
    from collections.abc import Iterator

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"

_GRAPH = re.compile(rf"graph\s+(?P<name>{_NAME})")
_FREE = re.compile(rf"free\s+(?P<name>{_NAME})\s+k\s*=\s*(?P<k>\d+)")
_CLASS = re.compile(rf"X\s+(?P<index>\d+)\s*->\s*(?P<targets>{_NAME}(?:\s+{_NAME})*)")
_REGULAR = re.compile(rf"regular\s+(?P<name>{_NAME})")
_VERTEX = re.compile(rf"vertex\s+(?P<names>{_NAME}(?:\s+{_NAME})*)")
_EDGE = re.compile(rf"(?P<kind>edge|connector)\s+(?P<name>{_NAME})\s*:\s*(?P<src>{_NAME})\s*->\s*(?P<rng>{_NAME})")

GRAPH_GRAMMAR = (
    "graph NAME | free P k=K | X I -> V1 [V2 ...] | regular P | vertex V ... | "
    "edge NAME: V -> W | connector NAME: V -> U"
)


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


class _GraphBuilder:
    def __init__(self) -> None:
        self.name = "unnamed"
        self.primes: list[PrimeId] = []
        self.free_targets: dict[str, dict[int, tuple[str, ...]]] = {}
        self.free_arity: dict[str, tuple[int, int]] = {}
        self.regular_vertices: dict[str, list[str]] = {}
        self.edges: list[tuple[int, str, str, str, str, str]] = []
        self.vertex_names: set[str] = set()
        self.edge_names: set[str] = set()
        self.current: PrimeId | None = None

    def _claim_vertex(self, name: str, line: int) -> None:
        if name in self.vertex_names:
            msg = f"line {line}: duplicate vertex name {name}"
            raise GraphReferenceError(msg)
        self.vertex_names.add(name)

    def _add_prime(self, name: str, kind: PrimeKind, line: int) -> PrimeId:
        if any(prime.name == name for prime in self.primes):
            msg = f"line {line}: duplicate prime name {name}"
            raise GraphReferenceError(msg)
        prime = PrimeId(name, kind)
        self.primes.append(prime)
        self.current = prime
        return prime

    def _require_block(self, kind: PrimeKind, line: int, what: str) -> PrimeId:
        if self.current is None or self.current.kind is not kind:
            msg = f"'{what}' must appear inside a {kind.value} block"
            raise GraphSyntaxError(msg, line)
        return self.current

    def feed(self, number: int, line: str) -> None:
        if match := _GRAPH.fullmatch(line):
            self.name = match["name"]
        elif match := _FREE.fullmatch(line):
            prime = self._add_prime(match["name"], PrimeKind.FREE, number)
            self._claim_vertex(prime.name, number)
            self.free_targets[prime.name] = {}
            self.free_arity[prime.name] = (int(match["k"]), number)
        elif match := _CLASS.fullmatch(line):
            prime = self._require_block(PrimeKind.FREE, number, "X")
            index = int(match["index"])
            arity, _ = self.free_arity[prime.name]
            if not 1 <= index <= arity:
                msg = f"class index {index} outside 1..{arity}"
                raise GraphSyntaxError(msg, number)
            if index in self.free_targets[prime.name]:
                msg = f"class {index} of {prime.name} declared twice"
                raise GraphSyntaxError(msg, number)
            self.free_targets[prime.name][index] = tuple(match["targets"].split())
        elif match := _REGULAR.fullmatch(line):
            prime = self._add_prime(match["name"], PrimeKind.REGULAR, number)
            self.regular_vertices[prime.name] = []
        elif match := _VERTEX.fullmatch(line):
            prime = self._require_block(PrimeKind.REGULAR, number, "vertex")
            for name in match["names"].split():
                self._claim_vertex(name, number)
                self.regular_vertices[prime.name].append(name)
        elif match := _EDGE.fullmatch(line):
            prime = self._require_block(PrimeKind.REGULAR, number, match["kind"])
            if match["name"] in self.edge_names:
                msg = f"line {number}: duplicate edge name {match['name']}"
                raise GraphReferenceError(msg)
            self.edge_names.add(match["name"])
            self.edges.append((number, match["kind"], prime.name, match["name"], match["src"], match["rng"]))
        else:
            msg = f"cannot parse {line!r}; expected one of: {GRAPH_GRAMMAR}"
            raise GraphSyntaxError(msg, number)

    def build(self) -> SeparatedGraph:
        for prime_name, (arity, line) in self.free_arity.items():
            declared = self.free_targets[prime_name]
            missing = [i for i in range(1, arity + 1) if i not in declared]
            if missing:
                msg = f"free prime {prime_name} is missing X lines for {missing}"
                raise GraphSyntaxError(msg, line)
            for index, targets in declared.items():
                for target in targets:
                    if target not in self.vertex_names:
                        msg = f"line {line}: X {index} of {prime_name} targets unknown vertex {target}"
                        raise GraphReferenceError(msg)

        internal_edges = []
        connectors = []
        for number, kind, prime_name, name, src, rng in self.edges:
            own = self.regular_vertices[prime_name]
            if src not in own:
                msg = f"line {number}: {kind} {name} starts at {src}, which is not a vertex of {prime_name}"
                raise GraphReferenceError(msg)
            if kind == "edge":
                if rng not in own:
                    msg = f"line {number}: edge {name} ends at {rng}, which is not a vertex of {prime_name}"
                    raise GraphReferenceError(msg)
                internal_edges.append(InternalEdge(name, src, rng))
            else:
                if rng not in self.vertex_names:
                    msg = f"line {number}: connector {name} targets unknown vertex {rng}"
                    raise GraphReferenceError(msg)
                connectors.append(RegularConnector(name, src, rng))

        free_targets = {
            prime: [declared[i] for i in sorted(declared)] for prime, declared in self.free_targets.items()
        }
        return SeparatedGraph(
            self.name,
            self.primes,
            free_targets,
            self.regular_vertices,
            internal_edges,
            connectors,
        )


def parse_graph(text: str) -> SeparatedGraph:
    """Parse graph-file contents. The result is structurally complete but not validated."""
    builder = _GraphBuilder()
    for number, line in _lines(text):
        builder.feed(number, line)
    return builder.build()


def format_graph(graph: SeparatedGraph) -> str:
    lines = [f"graph {graph.name}"]
    for prime in graph.primes:
        if prime.is_free:
            lines.append(f"free {prime.name} k={graph.arity(prime.name)}")
            for index, targets in enumerate(graph.free_targets(prime.name), start=1):
                lines.append(f"X {index} -> {' '.join(targets)}")
            continue
        lines.append(f"regular {prime.name}")
        own = graph.regular_vertices(prime.name)
        if own:
            lines.append(f"vertex {' '.join(own)}")
        for edge in graph.internal_edges:
            if edge.src in own:
                lines.append(f"edge {edge.name}: {edge.src} -> {edge.rng}")
        for connector in graph.regular_connectors:
            if connector.src in own:
                lines.append(f"connector {connector.name}: {connector.src} -> {connector.rng}")
    return "\n".join(lines) + "\n"
