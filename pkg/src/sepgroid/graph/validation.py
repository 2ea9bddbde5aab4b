from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import networkx as nx

from sepgroid.graph.types import FreeConnector, ValidationReport, Violation

if TYPE_CHECKING:
    from sepgroid.graph.separated_graph import SeparatedGraph

logger = logging.getLogger(__name__)

REGULAR_NONEMPTY = "regular-nonempty"
REGULAR_OUT_DEGREE = "regular-out-degree"
REGULAR_TRANSITIVE = "regular-transitive"
CONNECTOR_DESCENDS = "connector-descends"
FREE_CLASSES = "free-classes"
FREE_MINIMALITY = "free-minimality"
COMPONENTS_ARE_SCCS = "components-are-sccs"


def _check_regular_components(graph: SeparatedGraph) -> list[Violation]:
    found = []
    for prime in graph.primes:
        if prime.is_free:
            continue
        own = graph.regular_vertices(prime.name)
        if not own:
            found.append(Violation(REGULAR_NONEMPTY, prime.name, "regular component has no vertices"))
            continue
        for vertex in own:
            degree = len(graph.internal_out(vertex))
            if degree < 2:  # noqa: PLR2004
                detail = f"emits {degree} internal edge(s); at least 2 are required"
                found.append(Violation(REGULAR_OUT_DEGREE, vertex, detail))
        internal = nx.DiGraph()
        internal.add_nodes_from(own)
        internal.add_edges_from((e.src, e.rng) for e in graph.internal_edges if e.src in own)
        if not nx.is_strongly_connected(internal):
            found.append(Violation(REGULAR_TRANSITIVE, prime.name, "internal graph is not strongly connected"))
    return found


def _check_connectors(graph: SeparatedGraph) -> list[Violation]:
    found = []
    connectors = [edge for edge in graph.edges if isinstance(edge, FreeConnector)]
    connectors.extend(graph.regular_connectors)
    for connector in connectors:
        source = graph.prime_of(connector.src).name
        target = graph.prime_of(connector.rng).name
        if source == target or graph.component_leq(target, source):
            detail = f"target {connector.rng} is not in a component strictly below {source}"
            found.append(Violation(CONNECTOR_DESCENDS, connector.token, detail))
    return found


def _check_free_primes(graph: SeparatedGraph) -> list[Violation]:
    found = []
    names = [prime.name for prime in graph.primes]
    for prime in graph.primes:
        if not prime.is_free:
            continue
        for index, targets in enumerate(graph.free_targets(prime.name), start=1):
            if not targets:
                found.append(Violation(FREE_CLASSES, f"{prime.name}.{index}", "class X_i has no connectors"))
        minimal = not any(q != prime.name and graph.component_leq(prime.name, q) for q in names)
        arity = graph.arity(prime.name)
        if (arity == 0) != minimal:
            detail = f"k={arity} but the prime is {'minimal' if minimal else 'not minimal'}"
            found.append(Violation(FREE_MINIMALITY, prime.name, detail))
    return found


def _check_components_are_sccs(graph: SeparatedGraph) -> list[Violation]:
    declared = {frozenset(graph.component_vertices(prime.name)) for prime in graph.primes}
    found = []
    for scc in nx.strongly_connected_components(graph.vertex_digraph()):
        if frozenset(scc) not in declared:
            detail = f"strongly connected class {sorted(scc)} differs from the declared components"
            found.append(Violation(COMPONENTS_ARE_SCCS, ",".join(sorted(scc)), detail))
    return found


def validate_adaptable(graph: SeparatedGraph) -> ValidationReport:
    violations = [
        *_check_regular_components(graph),
        *_check_connectors(graph),
        *_check_free_primes(graph),
        *_check_components_are_sccs(graph),
    ]
    for violation in violations:
        logger.info("graph %s: %s", graph.name, violation)
    return ValidationReport(tuple(violations))
