"""설정 검증, 정밀도 정책, 로깅 설정 테스트."""

import pytest

from app.core.config import Settings, get_settings
from app.core.logger import get_logger
from app.core.logging_config import build_logging_config
from app.core.precision_policy import build_precision_policy, get_precision_policy, override_precision_policy


def test_defaults() -> None:
    settings = get_settings()

    assert settings.PRECISION_BITS == 128
    assert settings.GARLAND_MAX_LENGTH == 24
    assert settings.DATA_DIR == "data"
    assert get_settings() is settings


@pytest.mark.parametrize(
    ("name", "raw", "expected"),
    [
        ("GARLAND_MAX_LENGTH", "99", 30),
        ("GARLAND_MAX_LENGTH", "0", 1),
        ("GARLAND_MAX_LENGTH", "many", 24),
        ("PRECISION_BITS", "4", 16),
        ("MAX_PRECISION_BITS", "10", 64),
        ("GARLAND_CHUNK_SIZE", "1", 1 << 10),
        ("SIMILARITY_MAX_CANDIDATES", "-5", 1),
        ("NEWTON_TOLERANCE", "1", 1e-3),
        ("NEWTON_TOLERANCE", "tiny", 1e-11),
    ],
)
def test_environment_values_are_clamped(monkeypatch: pytest.MonkeyPatch, name: str, raw: str, expected) -> None:
    monkeypatch.setenv(name, raw)

    assert getattr(Settings(), name) == expected


def test_precision_policy_respects_ceiling() -> None:
    settings = Settings(PRECISION_BITS=256, MAX_PRECISION_BITS=512)

    assert build_precision_policy(settings).start_bits == 256
    assert build_precision_policy(settings).guard_bits == 32
    assert build_precision_policy(settings, start_bits=100_000).start_bits == 512
    assert build_precision_policy(settings, start_bits=1).start_bits == 16


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        ("1.2, 3", (1.2, 3.0)),
        ("0.5, x, 3", (3.0,)),
        ("", (1.05, 1.5, 2.5, 4.0)),
    ],
)
def test_newton_grid_keeps_values_above_one(raw: str, expected: tuple[float, ...]) -> None:
    assert build_precision_policy(Settings(NEWTON_GRID=raw)).newton_grid == expected


def test_override_is_scoped() -> None:
    custom = build_precision_policy(Settings(PRECISION_BITS=64))

    with override_precision_policy(custom):
        assert get_precision_policy() is custom
    assert get_precision_policy().start_bits == 128


def test_logging_level_resolution(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    assert build_logging_config()["root"]["level"] == "WARNING"

    monkeypatch.setenv("LOG_LEVEL", "info")
    assert build_logging_config()["root"]["level"] == "INFO"
    assert build_logging_config("debug")["loggers"]["app"]["level"] == "DEBUG"
    assert build_logging_config()["handlers"]["default"]["stream"] == "ext://sys.stderr"
    assert build_logging_config()["formatters"]["default"]["format"] == "%(levelname)-8s %(name)s %(message)s"


def test_loggers_live_under_app_namespace() -> None:
    assert get_logger("app.garland.words").name == "app.garland.words"
    assert get_logger("report").name == "app.report"
    assert get_logger("app").name == "app"
