from sepgroid.groupoid.germs import (
    Groupoid,
    cocycle,
    compose,
    format_germ,
    inverse,
    norm_length,
    unit,
)
from sepgroid.groupoid.types import Germ, GermWeight

__all__ = [
    "Germ",
    "GermWeight",
    "Groupoid",
    "cocycle",
    "compose",
    "format_germ",
    "inverse",
    "norm_length",
    "unit",
]
