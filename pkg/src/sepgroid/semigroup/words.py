from __future__ import annotations

import re
from typing import TYPE_CHECKING

from sepgroid.errors import GraphReferenceError, UnknownGeneratorError, WordSyntaxError
from sepgroid.graph.types import InternalEdge
from sepgroid.semigroup.semigroup import Semigroup, star
from sepgroid.semigroup.tparts import t_format
from sepgroid.semigroup.types import (
    ZERO,
    CPath,
    FreeBody,
    FreeStep,
    Monomial,
    RegularBody,
    RegularStep,
    Triple,
    Zero,
)

if TYPE_CHECKING:
    from sepgroid.graph.separated_graph import SeparatedGraph
    from sepgroid.semigroup.types import Element

WORD_GRAMMAR = "v:NAME | e:NAME[*] | a:P.J[*] | b:P.I.T[*] | t:V.I[^-1] | 0"

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_TOKEN = re.compile(
    rf"(?:v:(?P<vertex>{_NAME}))"
    rf"|(?:e:(?P<edge>{_NAME})(?P<edge_star>\*)?)"
    rf"|(?:a:(?P<loop_prime>{_NAME})\.(?P<loop_index>\d+)(?P<loop_star>\*)?)"
    rf"|(?:b:(?P<conn_prime>{_NAME})\.(?P<conn_index>\d+)\.(?P<conn_branch>\d+)(?P<conn_star>\*)?)"
    rf"|(?:t:(?P<t_vertex>{_NAME})\.(?P<t_index>\d+)(?P<t_inverse>\^-1)?)"
    r"|(?P<zero>0)"
)


def lift_token(token: str, semigroup: Semigroup) -> Element:
    """The one-generator element named by a word token."""
    match = _TOKEN.fullmatch(token)
    if match is None:
        msg = f"Malformed generator token {token!r}"
        raise WordSyntaxError(msg, WORD_GRAMMAR)
    graph = semigroup.graph
    try:
        if match["zero"]:
            return ZERO
        if match["vertex"]:
            vertex = match["vertex"]
            if not graph.has_vertex(vertex):
                msg = f"Unknown vertex {vertex!r}"
                raise UnknownGeneratorError(msg)
            return semigroup.vertex_element(vertex)
        if match["edge"]:
            lifted = _lift_edge(match["edge"], semigroup)
            return star(lifted) if match["edge_star"] else lifted
        if match["loop_prime"]:
            loop = graph.loop(match["loop_prime"], int(match["loop_index"]))
            arity = graph.arity(loop.prime)
            k = tuple(1 if j == loop.index else 0 for j in range(1, arity + 1))
            mono = Monomial(loop.prime, (), FreeBody(k, (0,) * arity))
            lifted = Triple(CPath(loop.prime), mono, CPath(loop.prime))
            return star(lifted) if match["loop_star"] else lifted
        if match["conn_prime"]:
            beta = graph.free_connector(match["conn_prime"], int(match["conn_index"]), int(match["conn_branch"]))
            step = FreeStep(beta.prime, beta.index, 0, beta.branch, beta.rng)
            lifted = Triple(CPath(beta.prime, (step,)), semigroup.identity_monomial(beta.rng), CPath(beta.rng))
            return star(lifted) if match["conn_star"] else lifted
        vertex, index = match["t_vertex"], int(match["t_index"])
        if not graph.has_vertex(vertex):
            msg = f"Unknown vertex {vertex!r}"
            raise UnknownGeneratorError(msg)
        if index < 1:
            msg = f"t-index must be at least 1: {token}"
            raise UnknownGeneratorError(msg)
        exponent = -1 if match["t_inverse"] else 1
        mono = semigroup.identity_monomial(vertex)
        mono = Monomial(mono.prime, ((index, exponent),), mono.body)
        return Triple(CPath(vertex), mono, CPath(vertex))
    except GraphReferenceError as error:
        raise UnknownGeneratorError(str(error)) from error


def _lift_edge(name: str, semigroup: Semigroup) -> Triple:
    edge = semigroup.graph.named_edge(name)
    prime = semigroup.graph.prime_of(edge.src).name
    if isinstance(edge, InternalEdge):
        mono = Monomial(prime, (), RegularBody((name,), (), edge.src, edge.rng, edge.rng))
        return Triple(CPath(edge.src), mono, CPath(edge.rng))
    step = RegularStep(prime, edge.src, (), name, edge.rng)
    return Triple(CPath(edge.src, (step,)), semigroup.identity_monomial(edge.rng), CPath(edge.rng))


def tokenize(text: str) -> list[str]:
    tokens = text.split()
    if not tokens:
        msg = "Empty word"
        raise WordSyntaxError(msg, WORD_GRAMMAR)
    return tokens


def parse_word(text: str, semigroup: Semigroup) -> Element:
    """Lift every token and fold the sequence with the normal-form product."""
    return semigroup.product(lift_token(token, semigroup) for token in tokenize(text))


def word_tokens(element: Element) -> list[str]:
    if isinstance(element, Zero):
        return ["0"]
    mono = element.mono
    tokens = element.gamma.tokens()
    base = mono.source
    for index, exponent in mono.t:
        suffix = "" if exponent > 0 else "^-1"
        tokens.extend([f"t:{base}.{index}{suffix}"] * abs(exponent))
    body = mono.body
    if isinstance(body, FreeBody):
        for j, (k, l) in enumerate(zip(body.k, body.l), start=1):  # noqa: E741
            tokens.extend([f"a:{mono.prime}.{j}"] * k)
            tokens.extend([f"a:{mono.prime}.{j}*"] * l)
    else:
        tokens.extend(f"e:{edge}" for edge in body.gamma)
        tokens.extend(f"e:{edge}*" for edge in reversed(body.nu))
    tokens.extend(f"{token}*" for token in reversed(element.eta.tokens()))
    return tokens or [f"v:{element.gamma.start}"]


def to_word(element: Element) -> str:
    return " ".join(word_tokens(element))


def _format_cpath(path: CPath) -> str:
    return " ".join([f"@{path.start}", *path.tokens()])


def format_element(element: Element) -> str:
    """Canonical text: gamma-steps | t-part | body | eta-steps."""
    if isinstance(element, Zero):
        return "0"
    body = element.mono.body
    if isinstance(body, FreeBody):
        body_text = f"k=({','.join(map(str, body.k))}) l=({','.join(map(str, body.l))})"
    else:
        body_text = f"[{' '.join(body.gamma)} / {' '.join(body.nu)}]@{body.meet}"
    return " | ".join(
        [_format_cpath(element.gamma), t_format(element.mono.t), body_text, _format_cpath(element.eta)]
    )


def generator_tokens(graph: SeparatedGraph, t_indices: int = 1) -> list[str]:
    """The generator alphabet of a graph, starred forms included."""
    tokens = [f"v:{vertex}" for vertex in graph.vertices]
    for edge in graph.edges:
        tokens.append(edge.token)
        tokens.append(f"{edge.token}*")
    for vertex in graph.vertices:
        for index in range(1, t_indices + 1):
            tokens.append(f"t:{vertex}.{index}")
            tokens.append(f"t:{vertex}.{index}^-1")
    return tokens
