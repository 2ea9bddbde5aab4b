from sepgroid.graph.parser import format_graph, parse_graph
from sepgroid.graph.separated_graph import SeparatedGraph
from sepgroid.graph.validation import validate_adaptable

__all__ = ["SeparatedGraph", "format_graph", "parse_graph", "validate_adaptable"]
