from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Sequence

from sepgroid.errors import PreconditionError
from sepgroid.lattice.types import CompactOpen, EPath, FreeTail
from sepgroid.semigroup.semigroup import is_idempotent
from sepgroid.semigroup.types import Zero

if TYPE_CHECKING:
    from sepgroid.lattice.cylinders import CylinderAlgebra
    from sepgroid.lattice.types import ScriptStep
    from sepgroid.semigroup.types import Element, Triple

logger = logging.getLogger(__name__)


class CoverTools:
    """Orthogonal finite covers of an idempotent and the expansions producing them."""

    def __init__(self, algebra: CylinderAlgebra) -> None:
        self.algebra = algebra
        self.lattice = algebra.lattice

    def _epaths(self, elements: Sequence[Element]) -> list[EPath]:
        for element in elements:
            if isinstance(element, Zero) or not is_idempotent(element):
                msg = "Covers consist of nonzero idempotents"
                raise PreconditionError(msg)
        return [self.lattice.epath_of(element) for element in elements]

    def _covers(self, root: EPath, members: list[EPath]) -> bool:
        if not all(self.lattice.epath_leq(member, root) for member in members):
            return False
        rest = self.algebra.subtract(CompactOpen((root,)), CompactOpen.of(members))
        return self.algebra.is_empty(rest)

    def _orthogonal(self, members: list[EPath]) -> bool:
        return all(
            self.lattice.meet_epaths(members[i], members[j]) is None
            for i in range(len(members))
            for j in range(i + 1, len(members))
        )

    def is_cover(self, element: Element, cover: Sequence[Element]) -> bool:
        root = self._epaths([element])[0]
        return self._covers(root, self._epaths(cover))

    def is_orthogonal_cover(self, element: Element, cover: Sequence[Element]) -> bool:
        root = self._epaths([element])[0]
        members = self._epaths(cover)
        return self._orthogonal(members) and self._covers(root, members)

    def orthogonalize_cover(self, element: Element, cover: Sequence[Element]) -> list[Triple]:
        root = self._epaths([element])[0]
        members = self._epaths(cover)
        if not self._covers(root, members):
            msg = "The family does not cover the idempotent"
            raise PreconditionError(msg)

        members = sorted(set(members), key=EPath.sort_key)
        while True:
            pair = self._overlapping_pair(members)
            if pair is None:
                break
            first, second = pair
            if self.lattice.epath_leq(first, second):
                members.remove(first)
            elif self.lattice.epath_leq(second, first):
                members.remove(second)
            else:
                joined = self.lattice.epath_of(
                    self.lattice.join_free(self.lattice.idem_of(first), self.lattice.idem_of(second))
                )
                logger.debug("joining overlapping free cylinders into %s", joined)
                members = [member for member in members if member not in (first, second)]
                if joined not in members:
                    members.append(joined)
            members.sort(key=EPath.sort_key)
        return [self.lattice.idem_of(member) for member in members]

    def _overlapping_pair(self, members: list[EPath]) -> tuple[EPath, EPath] | None:
        for i, first in enumerate(members):
            for second in members[i + 1 :]:
                if self.lattice.meet_epaths(first, second) is not None:
                    return first, second
        return None

    def cover_to_expansion(self, element: Element, cover: Sequence[Element]) -> list[ScriptStep]:
        """An expansion script whose replay on ``element`` yields exactly ``cover``."""
        root = self._epaths([element])[0]
        members = self._epaths(cover)
        if not self._orthogonal(members) or not self._covers(root, members):
            msg = "Not an orthogonal finite cover"
            raise PreconditionError(msg)
        return self._script_for(root, set(members), 0)

    def _script_for(self, root: EPath, members: set[EPath], offset: int) -> list[ScriptStep]:
        if root in members:
            if len(members) > 1:
                msg = f"Cover member {root} overlaps other members"
                raise PreconditionError(msg)
            return []
        if not members:
            msg = f"No cover member lies in the cylinder of {root}"
            raise PreconditionError(msg)

        choice = self._choice_for(root, members)
        children = self.lattice.simple_expand_epath(root, choice)
        parts: list[set[EPath]] = [set() for _ in children]
        for member in members:
            for index, child in enumerate(children):
                if self.lattice.epath_leq(member, child):
                    parts[index].add(member)
                    break
            else:
                msg = f"Cover member {member} is not below any expansion child of {root}"
                raise PreconditionError(msg)

        script: list[ScriptStep] = [(offset, choice)]
        # Right to left, so positions of the untouched children stay valid.
        for index in reversed(range(len(children))):
            script.extend(self._script_for(children[index], parts[index], offset + index))
        return script

    def _choice_for(self, root: EPath, members: set[EPath]) -> int | None:
        tail = root.tail
        if not isinstance(tail, FreeTail):
            return None
        over_root = [member for member in members if member.prefix == root.prefix]
        if len(over_root) != 1:
            msg = f"Expected one cover member over the prefix of {root}, found {len(over_root)}"
            raise PreconditionError(msg)
        target = over_root[0].tail
        if not isinstance(target, FreeTail):
            msg = "Free cover member with a path tail"
            raise PreconditionError(msg)
        for direction, (have, want) in enumerate(zip(tail.exponents, target.exponents), start=1):
            if want > have:
                return direction
        msg = f"Cover member over {root} is not strictly below it"
        raise PreconditionError(msg)
