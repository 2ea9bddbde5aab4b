from sepgroid.lattice.covers import CoverTools
from sepgroid.lattice.cylinders import CylinderAlgebra
from sepgroid.lattice.expressions import format_compact_open, parse_compact_open
from sepgroid.lattice.idempotents import IdempotentLattice
from sepgroid.lattice.types import CompactOpen, EPath, FreeTail, PathTail

__all__ = [
    "CompactOpen",
    "CoverTools",
    "CylinderAlgebra",
    "EPath",
    "FreeTail",
    "IdempotentLattice",
    "PathTail",
    "format_compact_open",
    "parse_compact_open",
]
