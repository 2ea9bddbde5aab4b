from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Protocol

from sepgroid.monoid.types import Verdict

if TYPE_CHECKING:
    from sepgroid.commands.session import Session

EXIT_OK = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_SYNTAX = 65
EXIT_PRECONDITION = 66


@dataclass
class Outcome:
    """What a command found: human text plus the fields of the JSON document."""

    text: str
    result: Any = None
    verdict: Verdict | None = None
    certificate: Any = None
    budget_exhausted: bool = False
    inputs: dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if self.verdict is Verdict.NO:
            return EXIT_NO
        if self.verdict is Verdict.UNKNOWN:
            return EXIT_UNKNOWN
        return EXIT_OK


def verdict_of(flag: bool) -> Verdict:
    return Verdict.YES if flag else Verdict.NO


class Command(Protocol):
    name: str
    _session: Session

    @property
    def session(self) -> Session:
        return self._session

    @session.setter
    def session(self, session: Session) -> None:
        self._session = session

    def action(self) -> Outcome:
        raise NotImplementedError

    def run(self) -> int:
        outcome = self.action()
        self._session.report(self.name, outcome)
        return outcome.exit_code
