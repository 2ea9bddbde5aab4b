from __future__ import annotations

from sepgroid.commands.command import Command, Outcome, verdict_of
from sepgroid.filters.literals import format_path, parse_path
from sepgroid.groupoid.germs import format_germ
from sepgroid.lattice.expressions import format_compact_open
from sepgroid.semigroup.types import Zero
from sepgroid.semigroup.words import parse_word, to_word


class FilterContains(Command):
    name = "filter-contains"

    def __init__(self, path: str, word: str) -> None:
        self.path = path
        self.word = word

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        point = parse_path(self.path, toolkit.graph)
        element = parse_word(self.word, toolkit.semigroup)
        found = toolkit.filters.filter_contains(point, element)
        return Outcome(
            "yes" if found else "no",
            result=found,
            verdict=verdict_of(found),
            inputs={"path": self.path, "word": self.word},
        )


class Ultrafilter(Command):
    name = "ultrafilter"

    def __init__(self, path: str) -> None:
        self.path = path

    def action(self) -> Outcome:
        filters = self.session.toolkit.filters
        point = parse_path(self.path, self.session.toolkit.graph)
        inputs = {"path": format_path(point)}
        if filters.is_ultrafilter(point):
            return Outcome("yes", result=True, verdict=verdict_of(True), inputs=inputs)

        inside, avoided = filters.separation_witness(point)
        witness = {"X": [to_word(e) for e in inside], "Y": [to_word(e) for e in avoided]}
        text = "\n".join(["no", f"X: {', '.join(witness['X'])}", f"Y: {', '.join(witness['Y'])}"])
        return Outcome(text, result=False, verdict=verdict_of(False), certificate=witness, inputs=inputs)


class GermOf(Command):
    name = "germ"

    def __init__(self, word: str, path: str) -> None:
        self.word = word
        self.path = path

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        element = parse_word(self.word, toolkit.semigroup)
        germ = toolkit.groupoid.germ_of(element, parse_path(self.path, toolkit.graph))
        result = {
            "range": format_path(germ.range),
            "n1": list(germ.weight.n1),
            "n2": list(germ.weight.n2),
            "source": format_path(germ.source),
        }
        return Outcome(format_germ(germ), result=result, inputs={"word": self.word, "path": self.path})


class BisectionCheck(Command):
    name = "bisection-check"

    def __init__(self, words: list[str]) -> None:
        self.words = words

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        algebra, groupoid = toolkit.algebra, toolkit.groupoid
        elements = [parse_word(word, toolkit.semigroup) for word in self.words]
        disjoint = groupoid.is_bisection_family(elements)
        ends = []
        for element in elements:
            if isinstance(element, Zero):
                continue
            source, target = groupoid.bisection_endpoints(element)
            ends.append(
                {
                    "word": to_word(element),
                    "source": format_compact_open(source, algebra),
                    "range": format_compact_open(target, algebra),
                }
            )
        lines = [f"{end['word']}: {end['source']} -> {end['range']}" for end in ends]
        lines.append("bisection" if disjoint else "not a bisection")
        return Outcome("\n".join(lines), result=ends, verdict=verdict_of(disjoint), inputs={"words": self.words})
