"""최종 리포트 합성 노드."""

from __future__ import annotations

from app.core.logger import get_logger
from app.graph.report.state import ReportState
from app.schemas.enums import CheckVerdict
from app.schemas.report import Report

logger = get_logger(__name__)


def summarize(state: ReportState) -> dict:
    report = Report.from_checks("paper-report", state.get("checks", []))
    failed = [check.name for check in report.checks if check.verdict is not CheckVerdict.PASS]
    logger.info("paper-report verdict=%s checks=%d failed=%s", report.verdict, len(report.checks), failed)
    return {"report": report}
