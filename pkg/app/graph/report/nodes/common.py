"""노드 공용 헬퍼."""

from __future__ import annotations

from pathlib import Path

from app.graph.report.state import ReportState
from app.schemas.report import CheckRecord

SIMPLICES = {"S1_4": 4, "S2_4": 4, "S1_5": 5, "S2_5": 5}
POLYHEDRA = {"P1_4": 4, "P2_4": 4, "P1_5": 5, "P": 5}


def data_path(state: ReportState, name: str) -> Path:
    return Path(state.get("data_dir", "data")) / name


def extend(state: ReportState, records: list[CheckRecord]) -> dict:
    return {"checks": [*state.get("checks", []), *records]}
