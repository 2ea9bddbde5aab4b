from sepgroid.filters.correspondence import FilterCorrespondence
from sepgroid.filters.literals import format_path, parse_path
from sepgroid.filters.types import (
    ExtendedFreeTail,
    InfinitePath,
    RegularPeriodicTail,
    RegularTail,
    SemifinitePath,
)

__all__ = [
    "ExtendedFreeTail",
    "FilterCorrespondence",
    "InfinitePath",
    "RegularPeriodicTail",
    "RegularTail",
    "SemifinitePath",
    "format_path",
    "parse_path",
]
