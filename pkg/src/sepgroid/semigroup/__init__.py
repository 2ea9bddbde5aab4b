from sepgroid.semigroup.semigroup import Semigroup, is_idempotent, star
from sepgroid.semigroup.types import ZERO, CPath, Element, Monomial, Triple, Zero
from sepgroid.semigroup.words import format_element, parse_word, to_word

__all__ = [
    "ZERO",
    "CPath",
    "Element",
    "Monomial",
    "Semigroup",
    "Triple",
    "Zero",
    "format_element",
    "is_idempotent",
    "parse_word",
    "star",
    "to_word",
]
