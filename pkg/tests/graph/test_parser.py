import pytest

from sepgroid.data import list_fixtures, load_fixture
from sepgroid.errors import GraphReferenceError, GraphSyntaxError
from sepgroid.graph.parser import format_graph, parse_graph
from sepgroid.graph.types import FreeConnector, InternalEdge, Loop, PrimeKind


class TestParseGraph:
    def test_free_prime_with_classes(self):
        graph = parse_graph(load_fixture("g1"))

        assert graph.name == "g1"
        assert graph.vertices == ("q1", "q2", "p")
        assert graph.arity("p") == 2
        assert graph.free_targets("p") == (("q1",), ("q2",))
        assert graph.arity("q1") == 0

    def test_regular_component(self):
        graph = parse_graph(load_fixture("g2"))

        assert graph.prime("r").kind is PrimeKind.REGULAR
        assert graph.regular_vertices("r") == ("w",)
        assert graph.internal_out("w") == (InternalEdge("f1", "w", "w"), InternalEdge("f2", "w", "w"))

    def test_separation_classes_of_a_free_prime(self):
        graph = parse_graph(load_fixture("g3"))

        assert graph.separation_classes("p") == ((Loop("p", 1), FreeConnector("p", 1, 1, "w")),)

    def test_comments_and_blank_lines_are_ignored(self):
        text = "# a sink\n\ngraph g   # name\nfree p k=0\n"

        graph = parse_graph(text)

        assert graph.name == "g"
        assert graph.vertices == ("p",)

    def test_unknown_line_reports_its_number(self):
        with pytest.raises(GraphSyntaxError) as excinfo:
            parse_graph("graph g\nfree p k=0\nbogus line\n")

        assert excinfo.value.line == 3

    def test_missing_class_lines(self):
        with pytest.raises(GraphSyntaxError, match="missing X lines"):
            parse_graph("graph g\nfree q k=0\nfree p k=2\nX 1 -> q\n")

    def test_class_outside_arity(self):
        with pytest.raises(GraphSyntaxError, match="outside"):
            parse_graph("graph g\nfree q k=0\nfree p k=1\nX 2 -> q\n")

    def test_vertex_outside_a_regular_block(self):
        with pytest.raises(GraphSyntaxError, match="regular block"):
            parse_graph("graph g\nfree p k=0\nvertex w\n")

    def test_duplicate_vertex(self):
        with pytest.raises(GraphReferenceError, match="duplicate vertex"):
            parse_graph("graph g\nfree p k=0\nregular r\nvertex p\n")

    def test_dangling_class_target(self):
        with pytest.raises(GraphReferenceError, match="unknown vertex"):
            parse_graph("graph g\nfree p k=1\nX 1 -> nowhere\n")

    def test_edge_leaving_its_component(self):
        text = "graph g\nregular r\nvertex w\nedge f: w -> u\nregular s\nvertex u\n"

        with pytest.raises(GraphReferenceError, match="not a vertex of r"):
            parse_graph(text)

    @pytest.mark.parametrize("name", list_fixtures())
    def test_format_graph_reproduces_the_graph(self, name):
        graph = parse_graph(load_fixture(name))

        again = parse_graph(format_graph(graph))

        assert format_graph(again) == format_graph(graph)
        assert again.vertices == graph.vertices
        assert again.edges == graph.edges

    def test_format_graph_text(self):
        graph = parse_graph(load_fixture("g3"))

        assert format_graph(graph) == (
            "graph g3\nregular r\nvertex w\nedge f1: w -> w\nedge f2: w -> w\nfree p k=1\nX 1 -> w\n"
        )
