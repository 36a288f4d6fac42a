"""paper-report 그래프 상태 정의."""

from typing import TypedDict

from app.schemas.report import CheckRecord, Report


class ReportState(TypedDict, total=False):
    """paper-report 그래프 상태.

    Keys:
        data_dir: 번들 데이터 디렉터리
        timings: 검사별 소요 시간 기록 여부
        max_garland_length: 가랜드 류 세기 최대 길이
        checks: 지금까지 쌓인 검사 항목
        report: 최종 리포트
    """

    data_dir: str
    timings: bool
    max_garland_length: int
    checks: list[CheckRecord]
    report: Report | None
