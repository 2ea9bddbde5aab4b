from __future__ import annotations

from typing import TYPE_CHECKING

from sepgroid.commands.command import Command, Outcome, verdict_of
from sepgroid.errors import WordSyntaxError
from sepgroid.lattice.expressions import format_compact_open, parse_compact_open
from sepgroid.semigroup.words import parse_word, to_word

if TYPE_CHECKING:
    from collections.abc import Sequence

    from sepgroid.lattice.types import CompactOpen, ScriptStep

SCRIPT_GRAMMAR = "POSITION:CHOICE with CHOICE a direction number or - for regular idempotents"

CYLINDER_OPERATIONS = ("and", "minus", "or", "empty", "eval")


def parse_script(tokens: Sequence[str]) -> list[ScriptStep]:
    script: list[ScriptStep] = []
    for token in tokens:
        position, _, choice = token.partition(":")
        if not position.isdigit() or not (choice == "-" or choice.isdigit()):
            msg = f"Bad expansion step {token!r}"
            raise WordSyntaxError(msg, SCRIPT_GRAMMAR)
        script.append((int(position), None if choice == "-" else int(choice)))
    return script


def format_script(script: Sequence[ScriptStep]) -> str:
    return " ".join(f"{position}:{'-' if choice is None else choice}" for position, choice in script)


class Expand(Command):
    name = "expand"

    def __init__(self, word: str, script: list[str]) -> None:
        self.word = word
        self.script = script

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        element = parse_word(self.word, toolkit.semigroup)
        words = [to_word(piece) for piece in toolkit.lattice.expand(element, parse_script(self.script))]
        return Outcome("\n".join(words), result=words, inputs={"word": self.word, "script": self.script})


class CoverCheck(Command):
    name = "cover-check"

    def __init__(self, word: str, cover: list[str]) -> None:
        self.word = word
        self.cover = cover

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        element = parse_word(self.word, toolkit.semigroup)
        pieces = [parse_word(word, toolkit.semigroup) for word in self.cover]
        covers = toolkit.covers.is_cover(element, pieces)
        orthogonal = covers and toolkit.covers.is_orthogonal_cover(element, pieces)
        if orthogonal:
            text = "orthogonal cover"
        elif covers:
            text = "cover, not orthogonal"
        else:
            text = "not a cover"
        return Outcome(
            text,
            result={"cover": covers, "orthogonal": orthogonal},
            verdict=verdict_of(orthogonal),
            inputs={"word": self.word, "cover": self.cover},
        )


class CoverToExpansion(Command):
    name = "cover-to-expansion"

    def __init__(self, word: str, cover: list[str]) -> None:
        self.word = word
        self.cover = cover

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        element = parse_word(self.word, toolkit.semigroup)
        pieces = [parse_word(word, toolkit.semigroup) for word in self.cover]
        script = toolkit.covers.cover_to_expansion(element, pieces)
        return Outcome(
            format_script(script),
            result=[list(step) for step in script],
            inputs={"word": self.word, "cover": self.cover},
        )


class Cylinders(Command):
    name = "cylinders"

    def __init__(self, operation: str, expressions: list[str]) -> None:
        self.operation = operation
        self.expressions = expressions

    def _value(self, values: list[CompactOpen]) -> CompactOpen:
        algebra = self.session.toolkit.algebra
        first, *rest = values
        for other in rest:
            if self.operation == "and":
                first = algebra.intersect(first, other)
            elif self.operation == "minus":
                first = algebra.subtract(first, other)
            else:
                first = algebra.union(first, other)
        return algebra.normalize(first)

    def action(self) -> Outcome:
        algebra = self.session.toolkit.algebra
        inputs = {"operation": self.operation, "expressions": self.expressions}
        values = [parse_compact_open(text, algebra) for text in self.expressions]
        if self.operation == "empty":
            empty = all(algebra.is_empty(value) for value in values)
            return Outcome("empty" if empty else "not empty", result=empty, verdict=verdict_of(empty), inputs=inputs)
        text = format_compact_open(self._value(values), algebra)
        return Outcome(text, result=text, inputs=inputs)
