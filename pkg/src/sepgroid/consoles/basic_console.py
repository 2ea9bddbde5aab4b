from __future__ import annotations

import sys
from typing import TextIO


class BasicConsole:
    """Outcomes on standard output, diagnostics on standard error.

    Streams default to the ones current at write time.
    """

    def __init__(self, out: TextIO | None = None, err: TextIO | None = None) -> None:
        self._out = out
        self._err = err

    def emit(self, data: str) -> None:
        self._write(self._out or sys.stdout, data)

    def emit_error(self, data: str) -> None:
        self._write(self._err or sys.stderr, f"sepgroid: {data}")

    @staticmethod
    def _write(stream: TextIO, data: str) -> None:
        stream.write(data if data.endswith("\n") else f"{data}\n")
        stream.flush()
