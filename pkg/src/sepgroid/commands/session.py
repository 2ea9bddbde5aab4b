from __future__ import annotations

import json
import logging
from typing import TYPE_CHECKING

from sepgroid.budgets import Bounds, Budget
from sepgroid.config.constants import DEFAULT_SAMPLES
from sepgroid.monoid.types import Verdict

if TYPE_CHECKING:
    from sepgroid.commands.command import Command, Outcome
    from sepgroid.consoles.console import Console
    from sepgroid.toolkit import Toolkit

logger = logging.getLogger(__name__)


class Session:
    """Runs commands against one graph and reports their outcomes to a console."""

    def __init__(
        self,
        console: Console,
        toolkit: Toolkit | None = None,
        budget: Budget | None = None,
        bounds: Bounds | None = None,
        *,
        as_json: bool = False,
        seed: int = 0,
        samples: int = DEFAULT_SAMPLES,
    ) -> None:
        self._console = console
        self._toolkit = toolkit
        self.budget = budget or Budget()
        self.bounds = bounds or Bounds()
        self.as_json = as_json
        self.seed = seed
        self.samples = samples

    @property
    def toolkit(self) -> Toolkit:
        if self._toolkit:
            return self._toolkit

        msg = "Session.toolkit has not been set."
        raise AttributeError(msg)

    def execute(self, command: Command) -> int:
        command.session = self
        logger.debug("running %s", command.name)
        return command.run()

    def emit(self, data: str) -> None:
        self._console.emit(data)

    def emit_error(self, data: str) -> None:
        self._console.emit_error(data)

    def report(self, name: str, outcome: Outcome) -> None:
        if not self.as_json:
            self.emit(outcome.text)
            return
        document = {
            "command": name,
            "inputs": outcome.inputs,
            "result": outcome.result,
            "verdict": outcome.verdict.value if isinstance(outcome.verdict, Verdict) else None,
            "certificate": outcome.certificate,
            "budget_exhausted": outcome.budget_exhausted,
        }
        self.emit(json.dumps(document, sort_keys=True))
