"""Bounded, restartable enumerations of E-paths and points.

Every function returns a fresh generator; nothing is cached between calls.
"""

from __future__ import annotations

import math
from itertools import product
from typing import TYPE_CHECKING, Iterator

from sepgroid.filters.types import (
    ExtendedFreeTail,
    RegularPeriodicTail,
    RegularTail,
    SemifinitePath,
)
from sepgroid.graph.types import InternalEdge
from sepgroid.lattice.types import EPath, FreeTail, PathTail
from sepgroid.semigroup.types import CPath, FreeStep, RegularStep

if TYPE_CHECKING:
    from sepgroid.budgets import Bounds
    from sepgroid.graph.separated_graph import SeparatedGraph
    from sepgroid.semigroup.types import Step


def internal_paths(graph: SeparatedGraph, vertex: str, max_len: int) -> Iterator[tuple[tuple[str, ...], str]]:
    """Paths of internal edges leaving ``vertex``, shortest first, as (edges, end)."""
    layer: list[tuple[tuple[str, ...], str]] = [((), vertex)]
    for _ in range(max_len + 1):
        yield from layer
        layer = [
            ((*edges, edge.name), edge.rng)
            for edges, end in layer
            for edge in graph.out_edges(end)
            if isinstance(edge, InternalEdge)
        ]


def steps_from(graph: SeparatedGraph, vertex: str, max_power: int, max_len: int) -> Iterator[Step]:
    if graph.is_free_vertex(vertex):
        for direction, targets in enumerate(graph.free_targets(vertex), start=1):
            for power in range(max_power + 1):
                for branch, target in enumerate(targets, start=1):
                    yield FreeStep(vertex, direction, power, branch, target)
        return
    prime = graph.prime_of(vertex).name
    for edges, end in internal_paths(graph, vertex, max_len):
        for edge in graph.out_edges(end):
            if not isinstance(edge, InternalEdge):
                yield RegularStep(prime, vertex, edges, edge.name, edge.rng)


def cpaths(graph: SeparatedGraph, start: str, max_depth: int, max_power: int, max_len: int) -> Iterator[CPath]:
    """c-paths from ``start`` of depth at most ``max_depth``, shallowest first."""
    layer = [CPath(start)]
    for _ in range(max_depth + 1):
        yield from layer
        layer = [path.extended(step) for path in layer for step in steps_from(graph, path.end, max_power, max_len)]


def _starts(graph: SeparatedGraph, start: str | None) -> tuple[str, ...]:
    return graph.vertices if start is None else (start,)


def epaths(graph: SeparatedGraph, bounds: Bounds, start: str | None = None) -> Iterator[EPath]:
    """E-paths with exponents up to ``max_exp`` and internal paths up to ``max_len`` edges."""
    depth = bounds.depth_for(graph)
    for origin in _starts(graph, start):
        for prefix in cpaths(graph, origin, depth, bounds.max_exp, bounds.max_len):
            end = prefix.end
            if graph.is_free_vertex(end):
                for exponents in product(range(bounds.max_exp + 1), repeat=graph.arity(end)):
                    yield EPath(prefix, FreeTail(exponents))
            else:
                for edges, tail_end in internal_paths(graph, end, bounds.max_len):
                    yield EPath(prefix, PathTail(edges, tail_end))


def semifinite_paths(graph: SeparatedGraph, bounds: Bounds, start: str | None = None) -> Iterator[SemifinitePath]:
    """Finite-data semifinite paths strictly inside the bounds, plus their infinite free tails."""
    depth = bounds.depth_for(graph)
    values = [*range(bounds.max_exp), math.inf]
    for origin in _starts(graph, start):
        for prefix in cpaths(graph, origin, depth, bounds.max_exp - 1, bounds.max_len - 1):
            end = prefix.end
            if graph.is_free_vertex(end):
                for exponents in product(values, repeat=graph.arity(end)):
                    yield SemifinitePath(prefix, ExtendedFreeTail(exponents))
            else:
                for edges, tail_end in internal_paths(graph, end, bounds.max_len - 1):
                    yield SemifinitePath(prefix, RegularTail(edges, tail_end))


def periodic_tails(graph: SeparatedGraph, vertex: str, size: int) -> Iterator[RegularPeriodicTail]:
    """Canonical eventually-periodic tails at ``vertex`` with |rho| + |cycle| <= size."""
    seen: set[RegularPeriodicTail] = set()
    for rho, base in internal_paths(graph, vertex, size - 1):
        for cycle, end in internal_paths(graph, base, size - len(rho)):
            if cycle and end == base:
                tail = RegularPeriodicTail.of(rho, cycle)
                if tail not in seen:
                    seen.add(tail)
                    yield tail


def infinite_points(graph: SeparatedGraph, size: int, start: str | None = None) -> Iterator[SemifinitePath]:
    """Eventually-periodic infinite paths whose description size is at most ``size``.

    The size counts the edges of the c-path prefix, then the edges of rho and
    of the cycle for a regular tail.
    """
    seen: set[SemifinitePath] = set()
    for origin in _starts(graph, start):
        for prefix in cpaths(graph, origin, size, size, size):
            if prefix.length > size:
                continue
            end = prefix.end
            if graph.is_free_vertex(end):
                point = SemifinitePath(prefix, ExtendedFreeTail((math.inf,) * graph.arity(end)))
                if point not in seen:
                    seen.add(point)
                    yield point
                continue
            for tail in periodic_tails(graph, end, size - prefix.length):
                point = SemifinitePath(prefix, tail)
                if point not in seen:
                    seen.add(point)
                    yield point
