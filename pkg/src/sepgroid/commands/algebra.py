from __future__ import annotations

from sepgroid.commands.command import Command, Outcome, verdict_of
from sepgroid.filters.enumeration import epaths
from sepgroid.graph.validation import validate_adaptable
from sepgroid.semigroup.words import format_element, parse_word, to_word


class Validate(Command):
    name = "validate"

    def action(self) -> Outcome:
        graph = self.session.toolkit.graph
        report = validate_adaptable(graph)
        lines = [f"{graph.name}: {'adaptable' if report.ok else 'not adaptable'}"]
        lines.extend(str(violation) for violation in report.violations)
        return Outcome(
            "\n".join(lines),
            result=[str(violation) for violation in report.violations],
            verdict=verdict_of(report.ok),
            inputs={"graph": graph.name},
        )


class Normalize(Command):
    name = "normalize"

    def __init__(self, word: str) -> None:
        self.word = word

    def action(self) -> Outcome:
        element = parse_word(self.word, self.session.toolkit.semigroup)
        return Outcome(
            to_word(element),
            result={"word": to_word(element), "normal_form": format_element(element)},
            inputs={"word": self.word},
        )


class Mul(Command):
    name = "mul"

    def __init__(self, words: list[str]) -> None:
        self.words = words

    def action(self) -> Outcome:
        semigroup = self.session.toolkit.semigroup
        product = semigroup.product(parse_word(word, semigroup) for word in self.words)
        return Outcome(
            to_word(product),
            result={"word": to_word(product), "normal_form": format_element(product)},
            inputs={"words": self.words},
        )


class Idempotents(Command):
    name = "idempotents"

    def __init__(self, vertex: str | None = None) -> None:
        self.vertex = vertex

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        if self.vertex is not None:
            toolkit.graph.vertex(self.vertex)
        words = [
            to_word(toolkit.lattice.idem_of(path))
            for path in epaths(toolkit.graph, self.session.bounds, self.vertex)
        ]
        return Outcome("\n".join(words), result=words, inputs={"vertex": self.vertex})
