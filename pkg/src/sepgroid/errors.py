from __future__ import annotations


class SepgroidError(Exception):
    """Base class for every error raised by the library."""


class GraphSyntaxError(SepgroidError, ValueError):
    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class GraphReferenceError(SepgroidError, ValueError):
    """Duplicate or dangling names in a graph description."""


class WordSyntaxError(SepgroidError, ValueError):
    def __init__(self, message: str, grammar: str = "") -> None:
        text = f"{message} (expected {grammar})" if grammar else message
        super().__init__(text)
        self.grammar = grammar


class UnknownGeneratorError(SepgroidError, ValueError):
    pass


class PreconditionError(SepgroidError, ValueError):
    """An operation was called outside of its domain."""
