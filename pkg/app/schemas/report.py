"""CLI 와 paper-report 가 내보내는 검사 리포트 스키마."""

from __future__ import annotations

from pydantic import BaseModel, Field

from app.schemas.enums import CheckVerdict


class CheckRecord(BaseModel):
    """검사 항목 하나. 값은 모두 EXPR 또는 사람이 읽을 문자열입니다."""

    name: str = Field(..., description="검사 이름")
    inputs: list[str] = Field(default_factory=list, description="입력 파일 또는 인자")
    verdict: CheckVerdict = Field(..., description="pass / fail / inconclusive")
    expected: str | None = Field(default=None, description="기대값")
    observed: str | None = Field(default=None, description="계산값")
    witnesses: dict[str, str] = Field(default_factory=dict, description="자리, 성분 등 증거")
    timing_ms: float | None = Field(default=None, description="--timings 일 때만 채움")


class Report(BaseModel):
    """명령 하나의 결과. verdict 는 검사 항목의 최악 판정입니다."""

    command: str = Field(..., description="실행한 명령")
    verdict: CheckVerdict = Field(..., description="전체 판정")
    checks: list[CheckRecord] = Field(default_factory=list, description="검사 항목")

    @classmethod
    def from_checks(cls, command: str, checks: list[CheckRecord]) -> Report:
        return cls(command=command, verdict=overall_verdict(checks), checks=checks)


def overall_verdict(checks: list[CheckRecord]) -> CheckVerdict:
    verdicts = {check.verdict for check in checks}
    if CheckVerdict.FAIL in verdicts:
        return CheckVerdict.FAIL
    if CheckVerdict.INCONCLUSIVE in verdicts:
        return CheckVerdict.INCONCLUSIVE
    return CheckVerdict.PASS
