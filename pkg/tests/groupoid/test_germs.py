import pytest

from sepgroid.errors import PreconditionError
from sepgroid.filters.literals import parse_path
from sepgroid.groupoid.germs import cocycle, compose, format_germ, inverse, norm_length, unit
from sepgroid.groupoid.types import GermWeight, trimmed
from sepgroid.semigroup.types import ZERO
from sepgroid.semigroup.words import parse_word


def germ(toolkit, word, path):
    return toolkit.groupoid.germ_of(parse_word(word, toolkit.semigroup), parse_path(path, toolkit.graph))


class TestWeights:
    def test_trimmed(self):
        assert trimmed([1, 0, 2, 0, 0]) == (1, 0, 2)
        assert trimmed([0, 0]) == ()

    def test_arithmetic(self):
        total = GermWeight((1, 2), (3,)) + GermWeight((-1, -2), (0, 1))

        assert total == GermWeight((), (3, 1))
        assert (-GermWeight((1,), ())).n1 == (-1,)
        assert (GermWeight((1,), (2,)) + -GermWeight((1,), (2,))).is_zero


class TestNormLength:
    def test_free_end(self, g1):
        assert norm_length(g1.lattice.epath_of(parse_word("a:p.1 a:p.1*", g1.semigroup))) == (1,)

    def test_regular_end(self, g3):
        path = g3.lattice.epath_of(parse_word("b:p.1.1 e:f1 e:f1* b:p.1.1*", g3.semigroup))

        assert norm_length(path) == (2,)


class TestGermOf:
    def test_loop_at_the_infinite_free_point(self, g3):
        found = germ(g3, "a:p.1", "[v:p] ; free(inf)")

        assert format_germ(found) == "([v:p] ; free(inf) ; () ; (1) ; [v:p] ; free(inf))"

    def test_path_pair_shifts_a_periodic_tail(self, g2):
        found = germ(g2, "e:f1 e:f2*", "[v:w] ; reg(f2 ; f1)")

        assert format_germ(found) == "([v:w] ; reg( ; f1) ; () ; () ; [v:w] ; reg(f2 ; f1))"

    def test_connector_into_a_regular_component(self, g3):
        found = germ(g3, "b:p.1.1", "[v:w] ; reg( ; f1)")

        assert format_germ(found) == "([v:p b:p.1.1] ; reg( ; f1) ; () ; (1) ; [v:w] ; reg( ; f1))"

    def test_t_variables_feed_the_cocycle(self, g1):
        found = germ(g1, "a:p.2 b:p.1.1", "[v:q1] ; free()")

        assert format_germ(found) == "([v:p b:p.1.1] ; free() ; (1) ; () ; [v:q1] ; free())"
        assert cocycle(found) == (1,)

    def test_prefix_is_absorbed(self, g3):
        found = germ(g3, "a:p.1*", "[v:p a:p.1 b:p.1.1] ; reg( ; f2)")

        assert found.range == parse_path("[v:p b:p.1.1] ; reg( ; f2)", g3.graph)
        assert found.weight.n2 == (-1,)

    def test_idempotents_give_units(self, g3):
        path = "[v:p a:p.1 b:p.1.1] ; reg( ; f1)"

        assert germ(g3, "a:p.1 a:p.1*", path) == unit(parse_path(path, g3.graph))

    def test_needs_a_nonzero_element(self, g3):
        with pytest.raises(PreconditionError, match="Zero has no germs"):
            g3.groupoid.germ_of(ZERO, parse_path("[v:p] ; free(inf)", g3.graph))

    def test_needs_an_infinite_point(self, g3):
        with pytest.raises(PreconditionError, match="infinite paths"):
            germ(g3, "a:p.1", "[v:p] ; free(2)")

    def test_needs_the_point_in_the_source(self, g3):
        with pytest.raises(PreconditionError, match="outside the source"):
            germ(g3, "b:p.1.1", "[v:p] ; free(inf)")


class TestGroupoidOperations:
    def test_inverse_composes_to_a_unit(self, g3):
        found = germ(g3, "a:p.1", "[v:p] ; free(inf)")

        assert compose(found, inverse(found)) == unit(found.range)
        assert compose(inverse(found), found) == unit(found.source)

    def test_germ_of_a_product_is_the_composite(self, g3):
        point = parse_path("[v:w] ; reg( ; f1)", g3.graph)
        first = g3.groupoid.germ_of(parse_word("b:p.1.1", g3.semigroup), point)
        second = g3.groupoid.germ_of(parse_word("a:p.1", g3.semigroup), first.range)
        product = g3.groupoid.germ_of(parse_word("a:p.1 b:p.1.1", g3.semigroup), point)

        assert compose(second, first) == product
        assert cocycle(product) == ()
        assert product.weight.n2 == (2,)

    def test_inverse_element_gives_the_inverse_germ(self, g2):
        point = parse_path("[v:w] ; reg(f2 ; f1)", g2.graph)
        forward = g2.groupoid.germ_of(parse_word("e:f1 e:f2*", g2.semigroup), point)
        backward = g2.groupoid.germ_of(parse_word("e:f2 e:f1*", g2.semigroup), forward.range)

        assert backward == inverse(forward)

    def test_composable_only_at_matching_points(self, g3):
        found = germ(g3, "a:p.1", "[v:p] ; free(inf)")
        other = unit(parse_path("[v:w] ; reg( ; f1)", g3.graph))

        with pytest.raises(PreconditionError, match="do not compose"):
            compose(found, other)


class TestBisections:
    def test_in_bisection(self, g3):
        found = germ(g3, "a:p.1", "[v:p] ; free(inf)")
        groupoid = g3.groupoid

        assert groupoid.in_bisection(found, parse_word("a:p.1", g3.semigroup))
        assert not groupoid.in_bisection(found, parse_word("a:p.1 a:p.1", g3.semigroup))
        assert not groupoid.in_bisection(found, parse_word("b:p.1.1", g3.semigroup))
        assert not groupoid.in_bisection(found, ZERO)

    def test_endpoints(self, g3):
        source, target = g3.groupoid.bisection_endpoints(parse_word("a:p.1", g3.semigroup))

        assert source == g3.algebra.cylinder(parse_word("v:p", g3.semigroup))
        assert target == g3.algebra.cylinder(parse_word("a:p.1 a:p.1*", g3.semigroup))

    def test_families(self, g3):
        def family(*words):
            return [parse_word(word, g3.semigroup) for word in words]

        assert g3.groupoid.is_bisection_family(family("a:p.1", "b:p.1.1"))
        assert g3.groupoid.is_bisection_family(family("a:p.1", "v:p v:w"))
        assert not g3.groupoid.is_bisection_family(family("a:p.1", "v:p"))
