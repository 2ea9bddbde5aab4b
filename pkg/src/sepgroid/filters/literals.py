"""Path literals: ``[v:START tokens] ; free(k1,...,kn)`` or ``[...] ; reg(rho)`` or ``[...] ; reg(rho ; c)``.

Free exponents may be ``inf``. The bracket holds the c-path prefix as word tokens.
"""

from __future__ import annotations

import math
import re
from typing import TYPE_CHECKING

from sepgroid.errors import GraphReferenceError, WordSyntaxError
from sepgroid.filters.types import (
    ExtendedFreeTail,
    RegularPeriodicTail,
    RegularTail,
    SemifinitePath,
)
from sepgroid.graph.types import InternalEdge
from sepgroid.semigroup.types import CPath, FreeStep, RegularStep

if TYPE_CHECKING:
    from sepgroid.filters.types import Exponent
    from sepgroid.graph.separated_graph import SeparatedGraph
    from sepgroid.semigroup.types import Step

PATH_GRAMMAR = "[v:START <steps>] ; free(k1,...,kn | inf) | reg(<edges>) | reg(<edges> ; <cycle>)"

_LITERAL = re.compile(r"\s*\[(?P<prefix>[^\]]*)\]\s*;\s*(?P<kind>free|reg)\((?P<body>[^)]*)\)\s*")
_LOOP = re.compile(r"a:(?P<prime>[^.\s]+)\.(?P<index>\d+)")
_CONNECTOR = re.compile(r"b:(?P<prime>[^.\s]+)\.(?P<index>\d+)\.(?P<branch>\d+)")


def _fail(message: str) -> WordSyntaxError:
    return WordSyntaxError(message, PATH_GRAMMAR)


def _parse_prefix(text: str, graph: SeparatedGraph) -> CPath:
    tokens = text.split()
    if not tokens or not tokens[0].startswith("v:"):
        msg = "Path literal prefix must begin with v:START"
        raise _fail(msg)
    start = tokens[0][2:]
    if not graph.has_vertex(start):
        msg = f"Unknown vertex {start!r}"
        raise _fail(msg)

    steps: list[Step] = []
    current = start
    loops: list[tuple[str, int]] = []
    internal: list[str] = []
    for token in tokens[1:]:
        loop = _LOOP.fullmatch(token)
        connector = _CONNECTOR.fullmatch(token)
        if loop:
            loops.append((loop["prime"], int(loop["index"])))
        elif connector:
            prime, index, branch = connector["prime"], int(connector["index"]), int(connector["branch"])
            if internal or prime != current or any(item != (prime, index) for item in loops):
                msg = f"Connector {token} does not continue the free step at {current}"
                raise _fail(msg)
            target = graph.free_connector(prime, index, branch).rng
            steps.append(FreeStep(prime, index, len(loops), branch, target))
            loops, current = [], target
        elif token.startswith("e:"):
            edge = graph.named_edge(token[2:])
            expected = graph.named_edge(internal[-1]).rng if internal else current
            if edge.src != expected:
                msg = f"Edge {token} does not leave {expected}"
                raise _fail(msg)
            if isinstance(edge, InternalEdge):
                internal.append(edge.name)
            else:
                prime = graph.prime_of(current).name
                steps.append(RegularStep(prime, current, tuple(internal), edge.name, edge.rng))
                internal, current = [], edge.rng
        else:
            msg = f"Unexpected token {token!r} in path prefix"
            raise _fail(msg)
    if loops or internal:
        msg = "Path prefix must end with a connector; put trailing loops or edges in the tail"
        raise _fail(msg)
    return CPath(start, tuple(steps))


def _parse_edges(text: str, vertex: str, graph: SeparatedGraph) -> tuple[tuple[str, ...], str]:
    edges = tuple(text.split())
    current = vertex
    for name in edges:
        edge = graph.named_edge(name)
        if not isinstance(edge, InternalEdge) or edge.src != current:
            msg = f"Edge {name} is not an internal edge leaving {current}"
            raise _fail(msg)
        current = edge.rng
    return edges, current


def _parse_exponent(text: str) -> Exponent:
    text = text.strip()
    if text == "inf":
        return math.inf
    if not text.isdigit():
        msg = f"Exponent must be a non-negative integer or inf: {text!r}"
        raise _fail(msg)
    return int(text)


def parse_path(text: str, graph: SeparatedGraph) -> SemifinitePath:
    match = _LITERAL.fullmatch(text)
    if match is None:
        msg = f"Malformed path literal {text!r}"
        raise _fail(msg)
    try:
        prefix = _parse_prefix(match["prefix"], graph)
        end = prefix.end
        body = match["body"]
        if match["kind"] == "free":
            if not graph.is_free_vertex(end):
                msg = f"free(...) tail at the regular vertex {end}"
                raise _fail(msg)
            exponents = tuple(_parse_exponent(part) for part in body.split(",")) if body.strip() else ()
            if len(exponents) != graph.arity(end):
                msg = f"Free tail at {end} needs {graph.arity(end)} exponents, got {len(exponents)}"
                raise _fail(msg)
            return SemifinitePath(prefix, ExtendedFreeTail(exponents))

        if graph.is_free_vertex(end):
            msg = f"reg(...) tail at the free vertex {end}"
            raise _fail(msg)
        rho_text, _, cycle_text = body.partition(";")
        rho, base = _parse_edges(rho_text, end, graph)
        if not cycle_text.strip():
            return SemifinitePath(prefix, RegularTail(rho, base))
        cycle, cycle_end = _parse_edges(cycle_text, base, graph)
        if cycle_end != base:
            msg = f"Cycle {cycle_text.strip()!r} does not return to {base}"
            raise _fail(msg)
        return SemifinitePath(prefix, RegularPeriodicTail.of(rho, cycle))
    except GraphReferenceError as error:
        raise _fail(str(error)) from error


def format_path(path: SemifinitePath) -> str:
    prefix = " ".join([f"v:{path.prefix.start}", *path.prefix.tokens()])
    tail = path.tail
    if isinstance(tail, ExtendedFreeTail):
        body = ",".join("inf" if value == math.inf else str(int(value)) for value in tail.exponents)
        return f"[{prefix}] ; free({body})"
    if isinstance(tail, RegularTail):
        return f"[{prefix}] ; reg({' '.join(tail.edges)})"
    return f"[{prefix}] ; reg({' '.join(tail.rho)} ; {' '.join(tail.cycle)})"
