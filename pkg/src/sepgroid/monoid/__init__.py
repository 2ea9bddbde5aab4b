from sepgroid.monoid.presentation import format_mon_elem, monoid_presentation, parse_mon_elem
from sepgroid.monoid.search import MonoidSearch
from sepgroid.monoid.typ import TypeSemigroup
from sepgroid.monoid.types import (
    EquidecompCertificate,
    EquidecompResult,
    EqResult,
    MonElem,
    Presentation,
    Verdict,
)

__all__ = [
    "EqResult",
    "EquidecompCertificate",
    "EquidecompResult",
    "MonElem",
    "MonoidSearch",
    "Presentation",
    "TypeSemigroup",
    "Verdict",
    "format_mon_elem",
    "monoid_presentation",
    "parse_mon_elem",
]
