"""CLI용 로깅 설정."""

from __future__ import annotations

import logging.config
import os
from typing import Any

_DEFAULT_LEVEL = "WARNING"


def _resolve_log_level(level: str | None = None) -> str:
    """인자 또는 환경변수에서 로그 레벨을 결정합니다."""
    if level:
        return level.upper()
    return os.getenv("LOG_LEVEL", _DEFAULT_LEVEL).upper()


def build_logging_config(level: str | None = None) -> dict[str, Any]:
    """stderr 단일 핸들러를 쓰는 dictConfig 설정을 생성합니다."""
    log_level = _resolve_log_level(level)

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(levelname)-8s %(name)s %(message)s",
            },
        },
        "handlers": {
            "default": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "stream": "ext://sys.stderr",
            },
        },
        "root": {"handlers": ["default"], "level": log_level},
        "loggers": {
            "app": {"level": log_level, "propagate": True},
        },
    }


def configure_logging(level: str | None = None) -> None:
    """dictConfig로 로깅을 구성합니다."""
    logging.config.dictConfig(build_logging_config(level))
