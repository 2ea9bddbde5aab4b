from __future__ import annotations

from typing import TYPE_CHECKING

from sepgroid.commands.command import Command, Outcome
from sepgroid.lattice.expressions import format_compact_open, parse_compact_open
from sepgroid.monoid.presentation import format_mon_elem, parse_mon_elem
from sepgroid.monoid.types import Verdict
from sepgroid.semigroup.semigroup import star
from sepgroid.semigroup.words import to_word

if TYPE_CHECKING:
    from collections.abc import Sequence

    from sepgroid.monoid.types import MonElem


def _steps(count: int) -> str:
    return f"{count} step" if count == 1 else f"{count} steps"


class MonoidCommand(Command):
    """Shared parsing and formatting against the monoid presentation of the session graph."""

    def parse(self, text: str) -> MonElem:
        return parse_mon_elem(text, self.session.toolkit.presentation)

    def show(self, value: MonElem) -> str:
        return format_mon_elem(value, self.session.toolkit.presentation)

    def format_all(self, values: Sequence[MonElem]) -> list[str]:
        return [self.show(value) for value in values]


class MonoidEq(MonoidCommand):
    name = "monoid-eq"

    def __init__(self, left: str, right: str) -> None:
        self.left = left
        self.right = right

    def action(self) -> Outcome:
        result = self.session.toolkit.search.mon_eq(self.parse(self.left), self.parse(self.right), self.session.budget)
        path = self.format_all(result.path)
        lines = [result.verdict.value]
        if result.verdict is Verdict.YES:
            lines[0] += f" ({_steps(max(len(path) - 1, 0))})"
            lines.extend(path)
        return Outcome(
            "\n".join(lines),
            result=result.verdict is Verdict.YES,
            verdict=result.verdict,
            certificate=path or None,
            budget_exhausted=result.budget_exhausted,
            inputs={"left": self.left, "right": self.right},
        )


class MonoidLeq(MonoidCommand):
    name = "monoid-leq"

    def __init__(self, left: str, right: str) -> None:
        self.left = left
        self.right = right

    def action(self) -> Outcome:
        result = self.session.toolkit.search.mon_leq(self.parse(self.left), self.parse(self.right), self.session.budget)
        difference = None if result.z is None else self.show(result.z)
        text = result.verdict.value if difference is None else f"{result.verdict.value} (z = {difference})"
        return Outcome(
            text,
            result=result.verdict is Verdict.YES,
            verdict=result.verdict,
            certificate=difference,
            budget_exhausted=result.budget_exhausted,
            inputs={"left": self.left, "right": self.right},
        )


class Refine(MonoidCommand):
    name = "refine"

    def __init__(self, a: str, b: str, c: str, d: str) -> None:
        self.terms = (a, b, c, d)

    def action(self) -> Outcome:
        a, b, c, d = (self.parse(term) for term in self.terms)
        result = self.session.toolkit.search.refinement_witness(a, b, c, d, self.session.budget)
        witness = None
        lines = [result.verdict.value]
        if result.witness is not None:
            witness = dict(zip("wxyz", self.format_all(result.witness)))
            lines.extend(f"{key} = {value}" for key, value in witness.items())
        return Outcome(
            "\n".join(lines),
            result=result.verdict is Verdict.YES,
            verdict=result.verdict,
            certificate=witness,
            budget_exhausted=result.budget_exhausted,
            inputs=dict(zip("abcd", self.terms)),
        )


class Typ(MonoidCommand):
    name = "typ"

    def __init__(self, expression: str) -> None:
        self.expression = expression

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        value = parse_compact_open(self.expression, toolkit.algebra)
        text = self.show(toolkit.typ.typ_of(value))
        return Outcome(text, result=text, inputs={"expression": self.expression})


class Equidecompose(MonoidCommand):
    name = "equidecompose"

    def __init__(self, source: str, target: str) -> None:
        self.source = source
        self.target = target

    def action(self) -> Outcome:
        toolkit = self.session.toolkit
        algebra, semigroup = toolkit.algebra, toolkit.semigroup
        source = parse_compact_open(self.source, algebra)
        target = parse_compact_open(self.target, algebra)
        result = toolkit.typ.equidecompose(source, target, self.session.budget)
        inputs = {"source": self.source, "target": self.target}
        if result.certificate is None:
            return Outcome(
                result.verdict.value,
                result=False,
                verdict=result.verdict,
                budget_exhausted=result.budget_exhausted,
                inputs=inputs,
            )

        elements = result.certificate.elements
        certificate = {
            "elements": [to_word(s) for s in elements],
            "multiplicities": list(result.certificate.multiplicities),
            "source": [format_compact_open(algebra.cylinder(semigroup.mul(star(s), s)), algebra) for s in elements],
            "target": [format_compact_open(algebra.cylinder(semigroup.mul(s, star(s))), algebra) for s in elements],
        }
        return Outcome(
            f"[{', '.join(certificate['elements'])}]",
            result=True,
            verdict=result.verdict,
            certificate=certificate,
            inputs=inputs,
        )
