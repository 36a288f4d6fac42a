"""로거 헬퍼. configure_logging 전에는 app 로거가 아무것도 출력하지 않습니다."""

import logging

_PACKAGE = "app"

logging.getLogger(_PACKAGE).addHandler(logging.NullHandler())


def get_logger(name: str) -> logging.Logger:
    """모듈 로거를 반환합니다. 패키지 밖 이름은 app 아래에 둡니다."""
    if name != _PACKAGE and not name.startswith(f"{_PACKAGE}."):
        name = f"{_PACKAGE}.{name}"
    return logging.getLogger(name)
