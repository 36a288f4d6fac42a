"""검사 항목(CheckRecord) 생성 헬퍼."""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass

from app.core.errors import CoxeterArithError
from app.core.logger import get_logger
from app.schemas.enums import CheckVerdict
from app.schemas.report import CheckRecord

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Observation:
    """계산 결과 한 건. verdict 가 None 이면 기대값과 비교해 정합니다."""

    observed: str
    witnesses: dict[str, str] | None = None
    verdict: CheckVerdict | None = None


def _normalize(text: str) -> str:
    return " ".join(text.split())


def run_check(
    name: str,
    compute: Callable[[], Observation],
    *,
    inputs: list[str] | None = None,
    expected: str | None = None,
    timings: bool = False,
    capture_errors: bool = True,
) -> CheckRecord:
    """compute 를 실행해 기록을 만듭니다. capture_errors 이면 도메인 예외를 fail 과 error 증거로 기록합니다."""
    started = time.perf_counter()
    try:
        observation = compute()
    except CoxeterArithError as exc:
        if not capture_errors:
            raise
        logger.warning("check failed with error name=%s error=%s", name, exc)
        observation = Observation(f"error: {exc}", {"error": type(exc).__name__}, CheckVerdict.FAIL)
    elapsed = (time.perf_counter() - started) * 1000
    verdict = observation.verdict
    if verdict is None:
        if expected is None:
            verdict = CheckVerdict.PASS
        else:
            matches = _normalize(observation.observed) == _normalize(expected)
            verdict = CheckVerdict.PASS if matches else CheckVerdict.FAIL
    logger.info("check name=%s verdict=%s elapsed_ms=%.1f", name, verdict, elapsed)
    return CheckRecord(
        name=name,
        inputs=inputs or [],
        verdict=verdict,
        expected=expected,
        observed=observation.observed,
        witnesses=observation.witnesses or {},
        timing_ms=round(elapsed, 3) if timings else None,
    )
