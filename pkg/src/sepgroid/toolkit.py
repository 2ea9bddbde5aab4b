from __future__ import annotations

from functools import cached_property
from typing import TYPE_CHECKING

from sepgroid.filters.correspondence import FilterCorrespondence
from sepgroid.groupoid.germs import Groupoid
from sepgroid.lattice.covers import CoverTools
from sepgroid.lattice.cylinders import CylinderAlgebra
from sepgroid.lattice.idempotents import IdempotentLattice
from sepgroid.monoid.presentation import monoid_presentation
from sepgroid.monoid.search import MonoidSearch
from sepgroid.monoid.typ import TypeSemigroup
from sepgroid.semigroup.semigroup import Semigroup

if TYPE_CHECKING:
    from sepgroid.graph.separated_graph import SeparatedGraph
    from sepgroid.monoid.types import Presentation


class Toolkit:
    """Every engine over one graph, built on first use."""

    def __init__(self, graph: SeparatedGraph) -> None:
        self.graph = graph

    @cached_property
    def semigroup(self) -> Semigroup:
        return Semigroup(self.graph)

    @cached_property
    def lattice(self) -> IdempotentLattice:
        return IdempotentLattice(self.semigroup)

    @cached_property
    def algebra(self) -> CylinderAlgebra:
        return CylinderAlgebra(self.lattice)

    @cached_property
    def covers(self) -> CoverTools:
        return CoverTools(self.algebra)

    @cached_property
    def filters(self) -> FilterCorrespondence:
        return FilterCorrespondence(self.lattice)

    @cached_property
    def groupoid(self) -> Groupoid:
        return Groupoid(self.filters, self.algebra)

    @cached_property
    def presentation(self) -> Presentation:
        return monoid_presentation(self.graph)

    @cached_property
    def search(self) -> MonoidSearch:
        return MonoidSearch(self.presentation)

    @cached_property
    def typ(self) -> TypeSemigroup:
        return TypeSemigroup(self.algebra, self.search)
