from __future__ import annotations

import re
from typing import TYPE_CHECKING

from sepgroid.errors import UnknownGeneratorError, WordSyntaxError
from sepgroid.monoid.types import MonElem, Presentation, Relation

if TYPE_CHECKING:
    from sepgroid.graph.separated_graph import SeparatedGraph

MON_ELEM_GRAMMAR = "N*a:VERTEX + a:VERTEX + ... | 0"

_TERM = re.compile(r"(?:(?P<count>\d+)\s*\*\s*)?a:(?P<vertex>[A-Za-z_][A-Za-z0-9_']*)")


def monoid_presentation(graph: SeparatedGraph) -> Presentation:
    """One relation a_v = sum a_r(e) for every vertex v and every class X of C_v."""
    vertices = graph.vertices
    zero = MonElem((0,) * len(vertices))
    position = {vertex: index for index, vertex in enumerate(vertices)}
    relations = []
    for vertex in vertices:
        for index, block in enumerate(graph.separation_classes(vertex)):
            counts = list(zero.counts)
            for edge in block:
                counts[position[edge.rng]] += 1
            lhs = [0] * len(vertices)
            lhs[position[vertex]] = 1
            relations.append(Relation(vertex, index, MonElem(tuple(lhs)), MonElem(tuple(counts))))
    return Presentation(vertices, tuple(relations))


def parse_mon_elem(text: str, presentation: Presentation) -> MonElem:
    text = text.strip()
    if text == "0":
        return presentation.zero()
    total = presentation.zero()
    for term in text.split("+"):
        match = _TERM.fullmatch(term.strip())
        if match is None:
            msg = f"Malformed monoid term {term.strip()!r}"
            raise WordSyntaxError(msg, MON_ELEM_GRAMMAR)
        vertex = match["vertex"]
        if vertex not in presentation.vertices:
            msg = f"Unknown vertex {vertex!r}"
            raise UnknownGeneratorError(msg)
        total = total + presentation.generator(vertex, int(match["count"] or 1))
    return total


def format_mon_elem(value: MonElem, presentation: Presentation) -> str:
    terms = [
        f"a:{vertex}" if count == 1 else f"{count}*a:{vertex}"
        for vertex, count in zip(presentation.vertices, value.counts)
        if count
    ]
    return " + ".join(terms) if terms else "0"
