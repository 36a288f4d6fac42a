"""가랜드의 산술성 분류 규칙."""

from __future__ import annotations

from app.core.logger import get_logger
from app.garland.catalog import Catalog
from app.garland.words import GarlandWord
from app.schemas.enums import ArithmeticClass

logger = get_logger(__name__)


def classify_garland(catalog: Catalog, word: GarlandWord) -> ArithmeticClass:
    """두 조각이 모두 들어간 가랜드는 준산술이 아닙니다. 한 조각만 쓰면 그 조각의 분류를 따릅니다.

    카탈로그에 형식 파일이 있으면 단어와 상관없이 형식 파일과 다이어그램의 일치, 두 주변 형식의 비닮음을 먼저 확인합니다.
    섞인 단어는 형식 파일이 꼭 필요합니다.
    """
    if catalog.has_forms or word.is_mixed:
        catalog.require_matching_forms()
        catalog.require_distinct_ambient()
    if word.is_mixed:
        verdict = ArithmeticClass.NOT_QUASI_ARITHMETIC
    else:
        verdict = catalog.piece_class(word.letters[0])
    logger.info("classify_garland catalog=%s word=%s class=%s", catalog.name, word, verdict)
    return verdict
