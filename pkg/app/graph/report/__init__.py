"""paper-report 그래프 패키지."""

from app.graph.report.workflow import compiled_report_graph

__all__ = ["compiled_report_graph"]
