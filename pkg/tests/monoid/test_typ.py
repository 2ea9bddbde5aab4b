from itertools import combinations, product

import pytest

from sepgroid.budgets import Bounds, Budget
from sepgroid.errors import PreconditionError
from sepgroid.filters.enumeration import epaths
from sepgroid.graph.types import PrimeKind
from sepgroid.lattice.expressions import parse_compact_open
from sepgroid.lattice.types import CompactOpen
from sepgroid.monoid.presentation import parse_mon_elem
from sepgroid.monoid.types import EquidecompCertificate, Verdict
from sepgroid.semigroup.semigroup import star
from sepgroid.semigroup.words import parse_word, to_word


def value(toolkit, text):
    return parse_compact_open(text, toolkit.algebra)


def elem(toolkit, text):
    return parse_mon_elem(text, toolkit.presentation)


class TestTypOf:
    @pytest.mark.parametrize(
        ("expression", "expected"),
        [
            ("0", "0"),
            ("Z(v:p)", "a:p"),
            ("Z(b:p.1.1 e:f1 e:f1* b:p.1.1*)", "a:w"),
            ("Z(a:p.1 a:p.1*) + Z(b:p.1.1 b:p.1.1*)", "a:w + a:p"),
        ],
    )
    def test_counts_cylinders_by_their_vertex(self, g3, expression, expected):
        assert g3.typ.typ_of(value(g3, expression)) == elem(g3, expected)

    def test_invariant_under_expansion(self, g3):
        root = parse_word("v:p", g3.semigroup)
        pieces = g3.lattice.expand(root, [(0, 1), (1, None), (0, 1)])
        expanded = g3.typ.typ_of(g3.algebra.as_compact_open(pieces))

        assert g3.search.mon_eq(g3.typ.typ_of(g3.algebra.cylinder(root)), expanded).verdict is Verdict.YES


class TestConnect:
    def test_connects_idempotents_over_the_same_vertex(self, g3):
        target = parse_word("a:p.1 a:p.1*", g3.semigroup)
        source = parse_word("v:p", g3.semigroup)
        s = g3.typ.connect_idempotents(target, source)

        assert to_word(s) == "a:p.1"
        assert g3.semigroup.mul(s, star(s)) == target
        assert g3.semigroup.mul(star(s), s) == source

    def test_regular_idempotents(self, g3):
        target = parse_word("b:p.1.1 e:f1 e:f1* b:p.1.1*", g3.semigroup)
        source = parse_word("e:f2 e:f2*", g3.semigroup)
        s = g3.typ.connect_idempotents(target, source)

        assert g3.semigroup.mul(s, star(s)) == target
        assert g3.semigroup.mul(star(s), s) == source

    def test_different_vertices(self, g3):
        with pytest.raises(PreconditionError, match="different vertices"):
            g3.typ.connect_idempotents(parse_word("v:p", g3.semigroup), parse_word("v:w", g3.semigroup))


class TestEquidecompose:
    def test_direct_match(self, g3):
        result = g3.typ.equidecompose(value(g3, "Z(v:p)"), value(g3, "Z(a:p.1 a:p.1*)"))

        assert result.verdict is Verdict.YES
        assert [to_word(s) for s in result.certificate.elements] == ["a:p.1"]
        assert result.certificate.multiplicities == (1,)

    def test_replayed_expansion(self, g3):
        source, target = value(g3, "Z(v:p)"), value(g3, "Z(v:p) + Z(v:w)")
        result = g3.typ.equidecompose(source, target)

        assert result.verdict is Verdict.YES
        assert [to_word(s) for s in result.certificate.elements] == ["a:p.1*", "b:p.1.1*"]
        assert g3.typ.verify_certificate(source, target, result.certificate)

    def test_regular_doubling(self, g2):
        source, target = value(g2, "Z(v:w)"), value(g2, "Z(e:f1 e:f1*)")
        result = g2.typ.equidecompose(source, target)

        assert result.verdict is Verdict.YES
        assert g2.typ.verify_certificate(source, target, result.certificate)

    def test_inequivalent_sets(self, g1):
        result = g1.typ.equidecompose(value(g1, "Z(v:q1)"), value(g1, "Z(v:q2)"))

        assert result.verdict is Verdict.NO
        assert result.certificate is None

    def test_unknown_is_reported(self, g3):
        result = g3.typ.equidecompose(value(g3, "Z(v:w)"), value(g3, "Z(v:p)"), Budget(max_weight=4))

        assert result.verdict is Verdict.UNKNOWN
        assert result.budget_exhausted

    def test_bad_certificates_are_rejected(self, g3):
        whole = value(g3, "Z(v:p)")
        loop = parse_word("a:p.1", g3.semigroup)
        certificate = EquidecompCertificate((loop,), (1,), whole, whole)

        assert not g3.typ.verify_certificate(whole, whole, certificate)


class TestClassification:
    @pytest.mark.parametrize(("vertex", "kind"), [("p", PrimeKind.FREE), ("w", PrimeKind.REGULAR)])
    def test_kinds_match_the_monoid(self, g3, vertex, kind):
        found = g3.typ.classify_prime_generator(vertex, Budget(max_weight=10, max_z_weight=2))

        assert found.kind is kind
        assert found.consistent

    def test_regular_witness(self, g2):
        assert g2.typ.classify_prime_generator("w").witness == elem(g2, "0")

    def test_minimal_free_prime(self, g0):
        found = g0.typ.classify_prime_generator("p")

        assert found.consistent
        assert found.witness is None


SMALL_BUDGET = Budget(max_steps=20_000, max_weight=16, max_z_weight=2)


def small_compact_opens(toolkit, pairs):
    cylinders = [CompactOpen((path,)) for path in epaths(toolkit.graph, Bounds(max_depth=1, max_exp=2, max_len=1))]
    if not pairs:
        return cylinders
    unions = {toolkit.algebra.union(a, b) for a, b in combinations(cylinders, 2)}
    return cylinders + [value for value in unions if value not in cylinders]


def check_equidecompositions(toolkit, values):
    decisions = {}
    checked = 0
    for source, target in product(values, repeat=2):
        key = (toolkit.typ.typ_of(source), toolkit.typ.typ_of(target))
        if key not in decisions:
            decisions[key] = toolkit.search.mon_eq(*key, SMALL_BUDGET).verdict
        if decisions[key] is Verdict.UNKNOWN:
            continue
        result = toolkit.typ.equidecompose(source, target, SMALL_BUDGET)
        assert result.verdict is decisions[key], (source, target)
        if result.verdict is Verdict.YES:
            assert toolkit.typ.verify_certificate(source, target, result.certificate)
        checked += 1
    return checked


class TestEquidecomposeAgreesWithTheMonoid:
    @pytest.mark.parametrize("name", ["g1", "g2", "g3"])
    def test_single_cylinders(self, request, name):
        toolkit = request.getfixturevalue(name)

        assert check_equidecompositions(toolkit, small_compact_opens(toolkit, pairs=False))

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["g1", "g2", "g3"])
    def test_unions_of_two_cylinders(self, request, name):
        toolkit = request.getfixturevalue(name)

        assert check_equidecompositions(toolkit, small_compact_opens(toolkit, pairs=True))
