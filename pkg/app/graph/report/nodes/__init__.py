"""paper-report 그래프 노드 모음."""

from app.graph.report.nodes.arithmetic import check_ambient_forms, check_classifications, check_trace_fields
from app.graph.report.nodes.forms import check_similarity
from app.graph.report.nodes.garland import check_garlands
from app.graph.report.nodes.geometry import check_signatures, check_vertex_links, check_weights
from app.graph.report.nodes.summary import summarize

__all__ = [
    "check_signatures",
    "check_vertex_links",
    "check_trace_fields",
    "check_ambient_forms",
    "check_classifications",
    "check_similarity",
    "check_weights",
    "check_garlands",
    "summarize",
]
