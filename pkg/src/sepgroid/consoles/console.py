from __future__ import annotations

from typing import Protocol


class Console(Protocol):
    """Where a session sends command outcomes and diagnostics."""

    def emit(self, data: str) -> None:
        """One outcome: a verdict line, a normal form or a JSON document."""
        ...

    def emit_error(self, data: str) -> None:
        """A diagnostic for a command that could not run."""
        ...
