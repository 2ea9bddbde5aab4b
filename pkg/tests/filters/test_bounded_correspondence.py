import math

import pytest

from sepgroid.budgets import Bounds
from sepgroid.filters.enumeration import epaths, semifinite_paths
from sepgroid.filters.types import ExtendedFreeTail, RegularPeriodicTail, RegularTail, SemifinitePath
from sepgroid.graph.types import InternalEdge

BOUNDS = Bounds(max_exp=4, max_len=5)


@pytest.fixture(params=["g1", "g2", "g3"])
def bounded(request):
    toolkit = request.getfixturevalue(request.param)
    candidates = list(epaths(toolkit.graph, BOUNDS))
    paths = list(semifinite_paths(toolkit.graph, BOUNDS))
    traces = {path: toolkit.filters.trace(path, candidates) for path in paths}
    return toolkit, candidates, traces


def infinite_extension(toolkit, path):
    tail = path.tail
    if isinstance(tail, ExtendedFreeTail):
        return SemifinitePath(path.prefix, ExtendedFreeTail((math.inf,) * len(tail.exponents)))
    loop = next(
        edge.name
        for edge in toolkit.graph.out_edges(tail.end)
        if isinstance(edge, InternalEdge) and edge.rng == tail.end
    )
    return SemifinitePath(path.prefix, RegularPeriodicTail.of(tail.edges, (loop,)))


class TestBoundedCorrespondence:
    def test_traces_are_filters(self, bounded):
        toolkit, candidates, traces = bounded
        lattice = toolkit.lattice
        for path, trace in traces.items():
            assert trace, path
            for e in trace:
                for f in trace:
                    meet = lattice.meet_epaths(e, f)
                    assert meet is not None
                    assert toolkit.filters.is_initial_segment(meet, path)
            bottom = next(iter(trace))
            for e in trace:
                bottom = lattice.meet_epaths(bottom, e)
            assert bottom in trace
            for f in candidates:
                assert (f in trace) == lattice.epath_leq(bottom, f), (path, f)

    def test_distinct_paths_have_distinct_traces(self, bounded):
        _, _, traces = bounded

        assert len(set(traces.values())) == len(traces)

    def test_trace_inverts(self, bounded):
        toolkit, _, traces = bounded
        for path, trace in traces.items():
            assert toolkit.filters.path_of_trace(trace, BOUNDS) == path

    def test_finite_paths_grow_into_infinite_ones(self, bounded):
        toolkit, candidates, traces = bounded
        for path, trace in traces.items():
            if path.is_infinite:
                continue
            extension = infinite_extension(toolkit, path)

            assert toolkit.filters.is_ultrafilter(extension)
            assert trace < toolkit.filters.trace(extension, candidates), path

    def test_infinite_paths_are_maximal(self, bounded):
        _, _, traces = bounded
        for path, trace in traces.items():
            if path.is_infinite:
                assert not any(trace < other for other in traces.values()), path

    def test_finite_regular_tails_are_enumerated(self, bounded):
        toolkit, _, traces = bounded
        lengths = {len(path.tail.edges) for path in traces if isinstance(path.tail, RegularTail)}

        assert not lengths or max(lengths) == BOUNDS.max_len - 1
