from __future__ import annotations

import logging
from dataclasses import dataclass, field
from random import Random
from typing import TYPE_CHECKING, Callable

from sepgroid.budgets import Budget
from sepgroid.groupoid.germs import compose, inverse, unit
from sepgroid.lattice.types import CompactOpen
from sepgroid.monoid.types import Verdict
from sepgroid.selftest.sampling import Sampler
from sepgroid.semigroup.semigroup import is_idempotent, star
from sepgroid.semigroup.types import Triple, Zero
from sepgroid.semigroup.words import format_element

if TYPE_CHECKING:
    from sepgroid.toolkit import Toolkit

logger = logging.getLogger(__name__)

# A check draws one sample and returns None on success or a failure description.
Check = Callable[[Sampler], "str | None"]

POINT_SIZE = 4
MODEL_POINT_SIZE = 6
SELFTEST_BUDGET = Budget(max_steps=5_000, max_weight=12, max_z_weight=2)


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _associativity(sampler: Sampler) -> str | None:
    semigroup = sampler.toolkit.semigroup
    a, b, c = sampler.element(), sampler.element(), sampler.element()
    if semigroup.mul(semigroup.mul(a, b), c) != semigroup.mul(a, semigroup.mul(b, c)):
        return f"(ab)c != a(bc) for {format_element(a)}, {format_element(b)}, {format_element(c)}"
    return None


def _regularity(sampler: Sampler) -> str | None:
    semigroup = sampler.toolkit.semigroup
    s = sampler.element()
    if semigroup.product([s, star(s), s]) != s:
        return f"s s* s != s for {format_element(s)}"
    return None


def _involution(sampler: Sampler) -> str | None:
    semigroup = sampler.toolkit.semigroup
    s, t = sampler.element(), sampler.element()
    if star(semigroup.mul(s, t)) != semigroup.mul(star(t), star(s)):
        return f"(st)* != t*s* for {format_element(s)}, {format_element(t)}"
    return None


def _idempotents_commute(sampler: Sampler) -> str | None:
    semigroup = sampler.toolkit.semigroup
    e, f = sampler.idempotent(), sampler.idempotent()
    if semigroup.mul(e, f) != semigroup.mul(f, e):
        return f"ef != fe for {format_element(e)}, {format_element(f)}"
    return None


def _e_unitary(sampler: Sampler) -> str | None:
    semigroup = sampler.toolkit.semigroup
    e = sampler.idempotent()
    s = sampler.element() if sampler.rng.random() < 0.5 else semigroup.mul(e, sampler.element())
    if semigroup.mul(e, s) == e and not is_idempotent(s):
        return f"e s = e with s not idempotent: {format_element(e)}, {format_element(s)}"
    return None


def _expansion_duality(sampler: Sampler) -> str | None:
    toolkit = sampler.toolkit
    root = sampler.epath(steps=1)
    _, produced = sampler.script(root, sampler.rng.randint(0, 4))
    element = toolkit.lattice.idem_of(root)
    cover = [toolkit.lattice.idem_of(path) for path in produced]
    if not toolkit.covers.is_orthogonal_cover(element, cover):
        return f"expansion of {format_element(element)} is not an orthogonal cover"
    replay = toolkit.lattice.expand_epaths(root, toolkit.covers.cover_to_expansion(element, cover))
    if set(replay) != set(produced):
        return f"cover_to_expansion does not replay the cover of {format_element(element)}"
    return None


def _cylinder_laws(sampler: Sampler) -> str | None:
    algebra = sampler.toolkit.algebra
    a, b, c = sampler.compact_open(), sampler.compact_open(), sampler.compact_open()
    laws = {
        "union commutes": algebra.equal(algebra.union(a, b), algebra.union(b, a)),
        "intersection commutes": algebra.equal(algebra.intersect(a, b), algebra.intersect(b, a)),
        "distributivity": algebra.equal(
            algebra.intersect(a, algebra.union(b, c)),
            algebra.union(algebra.intersect(a, b), algebra.intersect(a, c)),
        ),
        "difference is disjoint": algebra.are_disjoint(algebra.subtract(a, b), b),
        "difference and meet rebuild": algebra.equal(
            algebra.union(algebra.subtract(a, b), algebra.intersect(a, b)), a
        ),
    }
    broken = [name for name, holds in laws.items() if not holds]
    return f"cylinder laws broken: {', '.join(broken)}" if broken else None


def _cylinder_points(sampler: Sampler) -> str | None:
    algebra = sampler.toolkit.algebra
    a, b = sampler.compact_open(), sampler.compact_open()
    inside_a, inside_b = sampler.extent(a, MODEL_POINT_SIZE), sampler.extent(b, MODEL_POINT_SIZE)
    expected = {
        "union": (algebra.union(a, b), inside_a | inside_b),
        "intersection": (algebra.intersect(a, b), inside_a & inside_b),
        "difference": (algebra.subtract(a, b), inside_a - inside_b),
    }
    broken = [name for name, (value, points) in expected.items() if sampler.extent(value, MODEL_POINT_SIZE) != points]
    if algebra.is_subset(a, b) and not inside_a <= inside_b:
        broken.append("subset")
    if algebra.is_empty(a) and inside_a:
        broken.append("emptiness")
    return f"point model disagrees on {', '.join(broken)}" if broken else None


def _filter_axioms(sampler: Sampler) -> str | None:
    toolkit = sampler.toolkit
    lattice, filters = toolkit.lattice, toolkit.filters
    points = sampler.points(POINT_SIZE)
    if points and sampler.rng.random() < 0.5:
        path = sampler.rng.choice(points)
    else:
        path = filters.of_epath(sampler.epath())
    e = sampler.segment(path)
    if not filters.is_initial_segment(e, path):
        return f"{e} is not an initial segment of {path}"
    f = sampler.segment(path) if sampler.rng.random() < 0.5 else sampler.epath()
    meet = lattice.meet_epaths(e, f)
    if filters.is_initial_segment(f, path) and (meet is None or not filters.is_initial_segment(meet, path)):
        return f"filter of {path} is not closed under meets"
    above = sampler.segment(filters.of_epath(e))
    if not lattice.epath_leq(e, above) or not filters.is_initial_segment(above, path):
        return f"filter of {path} is not upward closed"
    return None


def _groupoid_laws(sampler: Sampler) -> str | None:
    toolkit = sampler.toolkit
    semigroup, groupoid, filters = toolkit.semigroup, toolkit.groupoid, toolkit.filters
    s, t = sampler.element(), sampler.element()
    if isinstance(t, Zero):
        return None
    source = semigroup.mul(star(t), t)
    points = [x for x in sampler.points(POINT_SIZE) if filters.filter_contains(x, source)]
    if not points:
        return None
    x = sampler.rng.choice(points)
    germ = groupoid.germ_of(t, x)
    if not groupoid.in_bisection(germ, t):
        return f"germ of {format_element(t)} is not in its bisection"
    if compose(germ, inverse(germ)) != unit(germ.x) or compose(unit(germ.x), germ) != germ:
        return f"unit or inverse law fails for the germ of {format_element(t)}"
    product = semigroup.mul(s, t)
    if isinstance(product, Triple) and filters.filter_contains(x, semigroup.mul(star(product), product)):
        if groupoid.germ_of(product, x) != compose(groupoid.germ_of(s, germ.x), germ):
            return f"germ_of is not multiplicative for {format_element(s)}, {format_element(t)}"
    return None


def _typ_invariance(sampler: Sampler) -> str | None:
    toolkit = sampler.toolkit
    root = sampler.epath(steps=1)
    _, produced = sampler.script(root, sampler.rng.randint(0, 3))
    before = toolkit.typ.typ_of(CompactOpen((root,)))
    after = toolkit.typ.typ_of(CompactOpen.of(produced))
    if toolkit.search.mon_eq(before, after, SELFTEST_BUDGET).verdict is not Verdict.YES:
        return f"typ changed under expansion of {root}"
    return None


SUITES: dict[str, Check] = {
    "associativity": _associativity,
    "regularity": _regularity,
    "involution": _involution,
    "idempotents-commute": _idempotents_commute,
    "e-unitary": _e_unitary,
    "expansion-duality": _expansion_duality,
    "cylinder-laws": _cylinder_laws,
    "cylinder-points": _cylinder_points,
    "filter-axioms": _filter_axioms,
    "groupoid-laws": _groupoid_laws,
    "typ-invariance": _typ_invariance,
}


def run_suite(name: str, toolkit: Toolkit, seed: int, samples: int) -> SuiteReport:
    check = SUITES[name]
    sampler = Sampler(toolkit, Random(f"{seed}:{toolkit.graph.name}:{name}"))
    report = SuiteReport(name)
    for _ in range(samples):
        failure = check(sampler)
        if failure is None:
            report.passed += 1
        else:
            report.failed += 1
            report.failures.append(failure)
            logger.info("%s on %s: %s", name, toolkit.graph.name, failure)
    return report


def run_all(toolkit: Toolkit, seed: int, samples: int) -> list[SuiteReport]:
    return [run_suite(name, toolkit, seed, samples) for name in SUITES]
