"""paper-report 실행 서비스."""

from __future__ import annotations

from pathlib import Path

from app.core.logger import get_logger
from app.graph.report import compiled_report_graph
from app.schemas.report import Report
from app.services.dataset import data_dir

logger = get_logger(__name__)


def run_paper_report(
    directory: str | Path | None = None, *, timings: bool = False, max_garland_length: int = 12
) -> Report:
    """번들 데이터셋 전체를 정해진 순서로 검사해 하나의 리포트로 모읍니다."""
    resolved = data_dir(directory)
    logger.info("paper-report start data_dir=%s", resolved)
    state = compiled_report_graph.invoke(
        {
            "data_dir": str(resolved),
            "timings": timings,
            "max_garland_length": max_garland_length,
            "checks": [],
        }
    )
    return state["report"]
