"""구간 연산 정밀도 정책 정의."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

from app.core.config import Settings, get_settings

_MIN_BITS = 16
_MIN_GUARD_BITS = 8

_policy_override: ContextVar[PrecisionPolicy | None] = ContextVar("precision_policy_override", default=None)


def _normalize_bits(
    value: int | None,
    default: int,
    *,
    lower_bound: int = _MIN_BITS,
    upper_bound: int | None = None,
) -> int:
    """비트 수를 정수로 정규화합니다."""
    try:
        bits = int(value) if value is not None else int(default)
    except (TypeError, ValueError):
        bits = int(default)

    bits = max(lower_bound, bits)
    if upper_bound is not None:
        bits = min(bits, upper_bound)
    return bits


def _parse_grid(raw: str) -> tuple[float, ...]:
    values: list[float] = []
    for token in (raw or "").split(","):
        token = token.strip()
        if not token:
            continue
        try:
            value = float(token)
        except ValueError:
            continue
        if value > 1.0:
            values.append(value)
    return tuple(values) or (1.05, 1.5, 2.5, 4.0)


@dataclass(frozen=True, slots=True)
class PrecisionPolicy:
    """인증된 부호 판정과 수치 해법에 쓰이는 정밀도 정책."""

    start_bits: int
    max_bits: int
    guard_bits: int
    newton_max_iterations: int
    newton_tolerance: float
    newton_grid: tuple[float, ...]


def build_precision_policy(settings: Settings, *, start_bits: int | None = None) -> PrecisionPolicy:
    """설정값으로부터 일관된 정밀도 정책을 생성합니다."""
    max_bits = _normalize_bits(settings.MAX_PRECISION_BITS, default=8192, lower_bound=64)
    start = _normalize_bits(
        start_bits if start_bits is not None else settings.PRECISION_BITS,
        default=128,
        upper_bound=max_bits,
    )
    guard = max(_MIN_GUARD_BITS, start // 8)

    return PrecisionPolicy(
        start_bits=start,
        max_bits=max_bits,
        guard_bits=guard,
        newton_max_iterations=max(1, int(settings.NEWTON_MAX_ITERATIONS)),
        newton_tolerance=float(settings.NEWTON_TOLERANCE),
        newton_grid=_parse_grid(settings.NEWTON_GRID),
    )


def get_precision_policy(settings: Settings | None = None) -> PrecisionPolicy:
    """현재 설정을 기반으로 정밀도 정책을 반환합니다. override_precision_policy 안에서는 그 정책이 우선합니다."""
    override = _policy_override.get()
    if override is not None and settings is None:
        return override
    resolved_settings = settings or get_settings()
    return build_precision_policy(resolved_settings)


@contextmanager
def override_precision_policy(policy: PrecisionPolicy) -> Iterator[PrecisionPolicy]:
    token = _policy_override.set(policy)
    try:
        yield policy
    finally:
        _policy_override.reset(token)
