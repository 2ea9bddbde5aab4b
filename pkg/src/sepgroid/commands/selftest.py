from __future__ import annotations

from typing import TYPE_CHECKING

from sepgroid.commands.command import Command, Outcome, verdict_of
from sepgroid.selftest.checks import SUITES, run_suite

if TYPE_CHECKING:
    from sepgroid.toolkit import Toolkit


class Selftest(Command):
    """Runs every property suite over each graph with the session seed and sample count."""

    name = "selftest"

    def __init__(self, toolkits: list[Toolkit], suites: list[str] | None = None) -> None:
        self.toolkits = toolkits
        self.suites = suites or list(SUITES)

    def action(self) -> Outcome:
        seed, samples = self.session.seed, self.session.samples
        lines = []
        rows = []
        for toolkit in self.toolkits:
            for suite in self.suites:
                report = run_suite(suite, toolkit, seed, samples)
                status = "ok" if report.ok else "FAILED"
                lines.append(f"{toolkit.graph.name} {suite}: {report.passed} passed, {report.failed} failed {status}")
                lines.extend(f"  {failure}" for failure in report.failures[:3])
                rows.append(
                    {
                        "graph": toolkit.graph.name,
                        "suite": suite,
                        "passed": report.passed,
                        "failed": report.failed,
                        "failures": report.failures,
                    }
                )
        passed = all(row["failed"] == 0 for row in rows)
        return Outcome(
            "\n".join(lines),
            result=rows,
            verdict=verdict_of(passed),
            inputs={"graphs": [toolkit.graph.name for toolkit in self.toolkits], "seed": seed, "samples": samples},
        )
