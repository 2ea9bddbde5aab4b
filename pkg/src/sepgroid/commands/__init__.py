from sepgroid.commands.algebra import Idempotents, Mul, Normalize, Validate
from sepgroid.commands.command import Command, Outcome
from sepgroid.commands.lattice import CoverCheck, CoverToExpansion, Cylinders, Expand
from sepgroid.commands.monoid import Equidecompose, MonoidEq, MonoidLeq, Refine, Typ
from sepgroid.commands.paths import BisectionCheck, FilterContains, GermOf, Ultrafilter
from sepgroid.commands.selftest import Selftest
from sepgroid.commands.session import Session

__all__ = [
    "BisectionCheck",
    "Command",
    "CoverCheck",
    "CoverToExpansion",
    "Cylinders",
    "Equidecompose",
    "Expand",
    "FilterContains",
    "GermOf",
    "Idempotents",
    "MonoidEq",
    "MonoidLeq",
    "Mul",
    "Normalize",
    "Outcome",
    "Refine",
    "Selftest",
    "Session",
    "Typ",
    "Ultrafilter",
    "Validate",
]
