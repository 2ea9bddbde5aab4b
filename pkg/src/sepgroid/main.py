from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Callable, NoReturn

from sepgroid import commands, data
from sepgroid.__about__ import __version__
from sepgroid.commands.command import EXIT_PRECONDITION, EXIT_SYNTAX, EXIT_USAGE
from sepgroid.commands.lattice import CYLINDER_OPERATIONS
from sepgroid.config import config
from sepgroid.consoles.basic_console import BasicConsole
from sepgroid.errors import (
    GraphReferenceError,
    GraphSyntaxError,
    PreconditionError,
    UnknownGeneratorError,
    WordSyntaxError,
)
from sepgroid.graph.parser import parse_graph
from sepgroid.graph.validation import validate_adaptable
from sepgroid.selftest.checks import SUITES
from sepgroid.toolkit import Toolkit

if TYPE_CHECKING:
    from sepgroid.commands.command import Command
    from sepgroid.consoles.console import Console
    from sepgroid.graph.separated_graph import SeparatedGraph

logger = logging.getLogger(__name__)

# Settings a command line flag may override for one run.
OVERRIDES = ("max_steps", "max_weight", "max_z_weight", "max_depth", "max_exp", "max_len", "seed", "samples")

Factory = Callable[[argparse.Namespace], "Command"]


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.format_usage().strip()}\n{self.prog}: error: {message}")


def _common_flags() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document instead of text")
    common.add_argument("--verbose", action="store_true", help="log progress at INFO level")
    common.add_argument("--debug", action="store_true", help="log search steps at DEBUG level")
    common.add_argument("--max-steps", type=int, help="states a monoid search may visit")
    common.add_argument("--max-weight", type=int, help="largest monoid element weight a search may reach")
    common.add_argument("--max-z-weight", type=int, help="largest weight tried for differences and refinements")
    common.add_argument("--max-depth", type=int, help="largest c-path depth enumerated (0 means the number of primes)")
    common.add_argument("--max-exp", type=int, help="largest free exponent enumerated")
    common.add_argument("--max-len", type=int, help="largest regular path length enumerated")
    common.add_argument("--seed", type=int, help="seed for sampled self tests")
    common.add_argument("--samples", type=int, help="samples drawn per self test suite")
    common.add_argument("--save-defaults", action="store_true", help="store the given budgets in the settings file")
    return common


def _add(
    subparsers: argparse._SubParsersAction,  # type: ignore[type-arg]
    common: argparse.ArgumentParser,
    name: str,
    factory: Factory,
    help_text: str,
) -> argparse.ArgumentParser:
    parser: argparse.ArgumentParser = subparsers.add_parser(name, parents=[common], help=help_text)
    parser.add_argument("graph", help="graph file or name of a shipped fixture")
    parser.set_defaults(factory=factory)
    return parser


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="sepgroid", description="Inverse semigroups, groupoids and monoids of separated graphs."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    _add(subparsers, common, "validate", lambda _: commands.Validate(), "check that a graph is adaptable")
    _add(subparsers, common, "normalize", lambda a: commands.Normalize(a.word), "normal form of a word").add_argument(
        "word"
    )
    _add(subparsers, common, "mul", lambda a: commands.Mul(a.words), "product of words").add_argument(
        "words", nargs="+"
    )
    _add(
        subparsers, common, "idempotents", lambda a: commands.Idempotents(a.vertex), "bounded E-path idempotents"
    ).add_argument("--vertex")

    expand = _add(subparsers, common, "expand", lambda a: commands.Expand(a.word, a.script), "run an expansion script")
    expand.add_argument("word")
    expand.add_argument("script", nargs="*", help="steps POSITION:CHOICE, CHOICE - for regular idempotents")
    for name, command in (("cover-check", commands.CoverCheck), ("cover-to-expansion", commands.CoverToExpansion)):
        cover = _add(subparsers, common, name, lambda a, command=command: command(a.word, a.cover), name)
        cover.add_argument("word")
        cover.add_argument("cover", nargs="*")
    cylinders = _add(
        subparsers, common, "cylinders", lambda a: commands.Cylinders(a.operation, a.expressions), "compact opens"
    )
    cylinders.add_argument("operation", choices=CYLINDER_OPERATIONS)
    cylinders.add_argument("expressions", nargs="+")

    contains = _add(
        subparsers, common, "filter-contains", lambda a: commands.FilterContains(a.path, a.word), "filter membership"
    )
    contains.add_argument("path")
    contains.add_argument("word")
    _add(
        subparsers, common, "ultrafilter", lambda a: commands.Ultrafilter(a.path), "ultrafilter test"
    ).add_argument("path")
    germ = _add(subparsers, common, "germ", lambda a: commands.GermOf(a.word, a.path), "germ of a word at a point")
    germ.add_argument("word")
    germ.add_argument("path")
    _add(
        subparsers, common, "bisection-check", lambda a: commands.BisectionCheck(a.words), "disjoint bisections"
    ).add_argument("words", nargs="+")

    for name, command in (("monoid-eq", commands.MonoidEq), ("monoid-leq", commands.MonoidLeq)):
        compare = _add(subparsers, common, name, lambda a, command=command: command(a.left, a.right), name)
        compare.add_argument("left")
        compare.add_argument("right")
    refine = _add(
        subparsers, common, "refine", lambda a: commands.Refine(a.a, a.b, a.c, a.d), "refinement of a + b = c + d"
    )
    for term in "abcd":
        refine.add_argument(term)
    _add(subparsers, common, "typ", lambda a: commands.Typ(a.expression), "type of a compact open").add_argument(
        "expression"
    )
    equidecompose = _add(
        subparsers,
        common,
        "equidecompose",
        lambda a: commands.Equidecompose(a.source, a.target),
        "equidecomposition certificate",
    )
    equidecompose.add_argument("source")
    equidecompose.add_argument("target")

    selftest = subparsers.add_parser("selftest", parents=[common], help="run the property suites")
    selftest.add_argument("graphs", nargs="*", help="graph files or fixtures (all fixtures when omitted)")
    selftest.add_argument("--suite", action="append", choices=sorted(SUITES))
    return parser


def load_graph(source: str) -> SeparatedGraph:
    path = Path(source)
    if path.is_file():
        return parse_graph(path.read_text(encoding="utf-8"))
    try:
        text = data.load_fixture(source)
    except FileNotFoundError:
        msg = f"No graph file or fixture named {source}"
        raise FileNotFoundError(msg) from None
    return parse_graph(text)


def _adaptable(source: str) -> SeparatedGraph:
    graph = load_graph(source)
    logger.debug("loaded graph %s from %s", graph.name, source)
    report = validate_adaptable(graph)
    if not report.ok:
        msg = f"Graph {graph.name} is not adaptable: {report.violations[0]}"
        raise PreconditionError(msg)
    return graph


def _configure_logging(args: argparse.Namespace) -> None:
    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
    elif args.verbose:
        logging.basicConfig(level=logging.INFO)


def _prepare(args: argparse.Namespace) -> tuple[Command, Toolkit | None]:
    if args.command == "selftest":
        sources = args.graphs or list(data.list_fixtures())
        return commands.Selftest([Toolkit(_adaptable(source)) for source in sources], args.suite), None
    graph = load_graph(args.graph) if args.command == "validate" else _adaptable(args.graph)
    return args.factory(args), Toolkit(graph)


def run(argv: list[str] | None = None, console: Console | None = None) -> int:
    console = console or BasicConsole()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        console.emit_error(str(error))
        return EXIT_USAGE

    _configure_logging(args)
    try:
        config.load_settings()
        settings = config.override({key: getattr(args, key) for key in OVERRIDES})
    except (KeyError, ValueError) as error:
        console.emit_error(str(error))
        return EXIT_USAGE
    if args.save_defaults:
        config.save()

    try:
        command, toolkit = _prepare(args)
        session = commands.Session(
            console,
            toolkit,
            config.budget(),
            config.bounds(),
            as_json=args.json,
            seed=settings["seed"],
            samples=settings["samples"],
        )
        return session.execute(command)
    except (GraphSyntaxError, GraphReferenceError, WordSyntaxError, UnknownGeneratorError) as error:
        console.emit_error(str(error))
        return EXIT_SYNTAX
    except (PreconditionError, FileNotFoundError) as error:
        console.emit_error(str(error))
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
