import pytest

from sepgroid.errors import PreconditionError
from sepgroid.lattice.types import EPath, FreeTail, PathTail
from sepgroid.semigroup.types import CPath, Zero
from sepgroid.semigroup.words import parse_word, to_word


def idem(toolkit, word):
    return parse_word(word, toolkit.semigroup)


def words(elements):
    return [to_word(element) for element in elements]


class TestEPaths:
    def test_vertex_epaths(self, g3):
        assert g3.lattice.vertex_epath("p") == EPath(CPath("p"), FreeTail((0,)))
        assert g3.lattice.vertex_epath("w") == EPath(CPath("w"), PathTail((), "w"))

    def test_epath_of_a_free_idempotent(self, g3):
        path = g3.lattice.epath_of(idem(g3, "a:p.1 a:p.1 a:p.1* a:p.1*"))

        assert path == EPath(CPath("p"), FreeTail((2,)))

    def test_epath_of_a_regular_idempotent(self, g2):
        path = g2.lattice.epath_of(idem(g2, "e:f1 e:f2 e:f2* e:f1*"))

        assert path == EPath(CPath("w"), PathTail(("f1", "f2"), "w"))

    def test_idem_of_inverts_epath_of(self, fixture_toolkit):
        lattice = fixture_toolkit.lattice
        for vertex in fixture_toolkit.graph.vertices:
            path = lattice.vertex_epath(vertex)
            if lattice.graph.is_free_vertex(vertex):
                children = lattice.simple_expand_epath(path, 1) if lattice.graph.arity(vertex) else []
            else:
                children = lattice.simple_expand_epath(path)
            for child in [path, *children]:
                assert lattice.epath_of(lattice.idem_of(child)) == child

    def test_non_idempotents_have_no_epath(self, g3):
        with pytest.raises(PreconditionError):
            g3.lattice.epath_of(idem(g3, "a:p.1"))
        with pytest.raises(PreconditionError):
            g3.lattice.epath_of(idem(g3, "a:p.1* b:p.1.1"))


class TestOrder:
    def test_meet_of_siblings_is_zero(self, g3):
        meet = g3.lattice.meet(idem(g3, "a:p.1 a:p.1*"), idem(g3, "b:p.1.1 b:p.1.1*"))

        assert isinstance(meet, Zero)

    def test_meet_of_nested_idempotents(self, g3):
        small = idem(g3, "a:p.1 a:p.1 a:p.1* a:p.1*")

        assert g3.lattice.meet(small, idem(g3, "a:p.1 a:p.1*")) == small
        assert g3.lattice.nat_leq(small, idem(g3, "v:p"))
        assert not g3.lattice.nat_leq(idem(g3, "v:p"), small)

    def test_free_directions_meet_to_their_sum(self, g1):
        meet = g1.lattice.meet(idem(g1, "a:p.1 a:p.1*"), idem(g1, "a:p.2 a:p.2*"))

        assert to_word(meet) == "a:p.1 a:p.1* a:p.2 a:p.2*"

    def test_join_free_takes_the_smaller_exponents(self, g1):
        joined = g1.lattice.join_free(idem(g1, "a:p.1 a:p.1*"), idem(g1, "a:p.2 a:p.2*"))

        assert to_word(joined) == "v:p"

    def test_join_free_needs_a_shared_prefix(self, g1):
        with pytest.raises(PreconditionError):
            g1.lattice.join_free(idem(g1, "v:p"), idem(g1, "b:p.1.1 b:p.1.1*"))

    def test_join_free_needs_a_free_prime(self, g2):
        with pytest.raises(PreconditionError):
            g2.lattice.join_free(idem(g2, "v:w"), idem(g2, "e:f1 e:f1*"))


class TestExpansion:
    def test_free_expansion(self, g3):
        children = g3.lattice.simple_expand(idem(g3, "v:p"), 1)

        assert words(children) == ["a:p.1 a:p.1*", "b:p.1.1 b:p.1.1*"]

    def test_regular_expansion(self, g2):
        children = g2.lattice.simple_expand(idem(g2, "v:w"))

        assert words(children) == ["e:f1 e:f1*", "e:f2 e:f2*"]

    def test_expansion_in_a_second_direction(self, g1):
        children = g1.lattice.simple_expand(idem(g1, "a:p.1 a:p.1*"), 2)

        assert words(children) == ["a:p.1 a:p.1* a:p.2 a:p.2*", "b:p.2.1 b:p.2.1*"]

    def test_expansion_through_a_connector(self, g3):
        children = g3.lattice.simple_expand(idem(g3, "b:p.1.1 b:p.1.1*"))

        assert words(children) == ["b:p.1.1 e:f1 e:f1* b:p.1.1*", "b:p.1.1 e:f2 e:f2* b:p.1.1*"]

    def test_free_expansion_needs_a_direction(self, g1):
        with pytest.raises(PreconditionError, match="needs a direction in 1..2"):
            g1.lattice.simple_expand(idem(g1, "v:p"))
        with pytest.raises(PreconditionError):
            g1.lattice.simple_expand(idem(g1, "v:p"), 3)

    def test_regular_expansion_takes_no_direction(self, g2):
        with pytest.raises(PreconditionError, match="takes no direction"):
            g2.lattice.simple_expand(idem(g2, "v:w"), 1)

    def test_scripts_replace_the_chosen_position(self, g3):
        pieces = g3.lattice.expand(idem(g3, "v:p"), [(0, 1), (1, None), (0, 1)])

        assert words(pieces) == [
            "a:p.1 a:p.1 a:p.1* a:p.1*",
            "a:p.1 b:p.1.1 b:p.1.1* a:p.1*",
            "b:p.1.1 e:f1 e:f1* b:p.1.1*",
            "b:p.1.1 e:f2 e:f2* b:p.1.1*",
        ]

    def test_empty_script_keeps_the_idempotent(self, g2):
        assert words(g2.lattice.expand(idem(g2, "e:f1 e:f1*"), [])) == ["e:f1 e:f1*"]

    def test_script_positions_are_checked(self, g3):
        with pytest.raises(PreconditionError, match="outside 0..1"):
            g3.lattice.expand(idem(g3, "v:p"), [(0, 1), (2, 1)])

    def test_expansions_are_orthogonal_covers(self, g3):
        root = idem(g3, "v:p")
        pieces = g3.lattice.expand(root, [(0, 1), (0, 1), (2, None)])

        assert g3.covers.is_orthogonal_cover(root, pieces)
