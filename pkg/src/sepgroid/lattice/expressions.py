"""Text form of compact open sets.

    expr := term (("+" | "-") term)*
    term := atom ("&" atom)*
    atom := "Z(" word ")" | "(" expr ")" | "0"
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

from sepgroid.errors import PreconditionError, WordSyntaxError
from sepgroid.semigroup.semigroup import is_idempotent
from sepgroid.semigroup.types import Zero
from sepgroid.semigroup.words import parse_word, to_word

if TYPE_CHECKING:
    from sepgroid.lattice.cylinders import CylinderAlgebra
    from sepgroid.lattice.types import CompactOpen

COMPACT_OPEN_GRAMMAR = "Z(<word>) | 0, combined with & - + and parentheses"

_LEXEME = re.compile(r"\s*(?:(?P<cylinder>Z\((?P<word>[^()]*)\))|(?P<op>[&+\-()])|(?P<zero>0))")


def _lex(text: str) -> list[tuple[str, str]]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _LEXEME.match(text, position)
        if match is None:
            msg = f"Unexpected input at offset {position}: {text[position:]!r}"
            raise WordSyntaxError(msg, COMPACT_OPEN_GRAMMAR)
        if match["cylinder"]:
            tokens.append(("Z", match["word"]))
        elif match["op"]:
            tokens.append((match["op"], match["op"]))
        else:
            tokens.append(("0", "0"))
        position = match.end()
    if not tokens:
        msg = "Empty compact-open expression"
        raise WordSyntaxError(msg, COMPACT_OPEN_GRAMMAR)
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], algebra: CylinderAlgebra) -> None:
        self.tokens = tokens
        self.position = 0
        self.algebra = algebra

    def peek(self) -> str | None:
        return self.tokens[self.position][0] if self.position < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        if self.position >= len(self.tokens):
            msg = "Unexpected end of compact-open expression"
            raise WordSyntaxError(msg, COMPACT_OPEN_GRAMMAR)
        token = self.tokens[self.position]
        self.position += 1
        return token

    def expr(self) -> CompactOpen:
        value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            right = self.term()
            value = self.algebra.union(value, right) if op == "+" else self.algebra.subtract(value, right)
        return value

    def term(self) -> CompactOpen:
        value = self.atom()
        while self.peek() == "&":
            self.take()
            value = self.algebra.intersect(value, self.atom())
        return value

    def atom(self) -> CompactOpen:
        kind, text = self.take()
        if kind == "Z":
            return cylinder_of_word(text, self.algebra)
        if kind == "0":
            return self.algebra.empty()
        if kind == "(":
            value = self.expr()
            closing, _ = self.take()
            if closing != ")":
                msg = "Missing closing parenthesis"
                raise WordSyntaxError(msg, COMPACT_OPEN_GRAMMAR)
            return value
        msg = f"Unexpected {text!r}"
        raise WordSyntaxError(msg, COMPACT_OPEN_GRAMMAR)


def cylinder_of_word(word: str, algebra: CylinderAlgebra) -> CompactOpen:
    element = parse_word(word, algebra.lattice.semigroup)
    if isinstance(element, Zero):
        return algebra.empty()
    if not is_idempotent(element):
        msg = f"Z(...) needs an idempotent word, got {word!r}"
        raise PreconditionError(msg)
    return algebra.cylinder(element)


def parse_compact_open(text: str, algebra: CylinderAlgebra) -> CompactOpen:
    parser = _Parser(_lex(text), algebra)
    value = parser.expr()
    if parser.peek() is not None:
        msg = f"Trailing input after expression: {parser.tokens[parser.position][1]!r}"
        raise WordSyntaxError(msg, COMPACT_OPEN_GRAMMAR)
    return value


def format_compact_open(value: CompactOpen, algebra: CylinderAlgebra) -> str:
    if not value.cylinders:
        return "0"
    return " + ".join(f"Z({to_word(algebra.lattice.idem_of(path))})" for path in value)
