"""paper-report 그래프 워크플로우 구성."""

from langgraph.graph import END, StateGraph

from app.graph.report.nodes import (
    check_ambient_forms,
    check_classifications,
    check_garlands,
    check_signatures,
    check_similarity,
    check_trace_fields,
    check_vertex_links,
    check_weights,
    summarize,
)
from app.graph.report.state import ReportState

_STAGES = (
    ("check_signatures", check_signatures),
    ("check_vertex_links", check_vertex_links),
    ("check_trace_fields", check_trace_fields),
    ("check_ambient_forms", check_ambient_forms),
    ("check_classifications", check_classifications),
    ("check_similarity", check_similarity),
    ("check_weights", check_weights),
    ("check_garlands", check_garlands),
    ("summarize", summarize),
)


def _create_report_workflow() -> StateGraph:
    """단계를 순서대로 잇는 리포트 그래프를 생성합니다."""
    workflow = StateGraph(ReportState)
    for name, node in _STAGES:
        workflow.add_node(name, node)
    workflow.set_entry_point(_STAGES[0][0])
    for (current, _), (following, _) in zip(_STAGES, _STAGES[1:]):
        workflow.add_edge(current, following)
    workflow.add_edge(_STAGES[-1][0], END)
    return workflow


compiled_report_graph = _create_report_workflow().compile()
