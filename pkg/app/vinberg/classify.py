"""Vinberg 판정법에 따른 산술성 분류."""

from __future__ import annotations

from dataclasses import dataclass

from app.core.errors import TraceFieldError
from app.core.logger import get_logger
from app.coxeter.construct import truncated_gram
from app.coxeter.signature import Signature, signature
from app.exact.embedding import is_algebraic_integer, sign_of
from app.exact.linalg import Matrix, cofactor
from app.schemas.enums import ArithmeticClass
from app.vinberg.ambient import admissible, ambient_form
from app.vinberg.cyclic import TraceField, cyclic_products, trace_field

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Classification:
    verdict: ArithmeticClass
    field: TraceField | None = None
    witness: str | None = None
    truncated: tuple[int, ...] = ()


def simplex_hyperideal_facets(matrix: Matrix, dimension: int) -> list[int]:
    """단체 그람 행렬이면 초이상 꼭짓점의 맞은편 면을 내림차순으로, 아니면 빈 목록을 반환합니다."""
    if len(matrix) != dimension + 1 or signature(matrix) != Signature(dimension, 1, 0):
        return []
    facets = [i for i in range(len(matrix)) if sign_of(cofactor(matrix, i, i)) < 0]
    return sorted(facets, reverse=True)


def classify(matrix: Matrix, dimension: int) -> Classification:
    """산술 / 진 준산술 / 정수성 미정 / 비준산술 가운데 하나로 분류합니다.

    초이상 꼭짓점이 있는 단체는 정확히 절단한 다면체에서 판정합니다.
    """
    facets = simplex_hyperideal_facets(matrix, dimension)
    if facets:
        matrix = truncated_gram(matrix, facets)
    products = cyclic_products(matrix)
    for label, value in products.labelled():
        if value.has_formal_support():
            logger.info("classify undetermined product=%s", label)
            return Classification(ArithmeticClass.UNDETERMINED, witness=f"{label} = {value}", truncated=tuple(facets))
    try:
        field = trace_field(matrix)
    except TraceFieldError:
        return Classification(ArithmeticClass.UNDETERMINED, truncated=tuple(facets))
    form = ambient_form(matrix)
    if not admissible(form, dimension):
        return Classification(ArithmeticClass.NOT_QUASI_ARITHMETIC, field, "admissibility", tuple(facets))
    for label, value in products.labelled():
        if not is_algebraic_integer(value):
            logger.info("classify non-integral product=%s value=%s", label, value)
            return Classification(
                ArithmeticClass.PROPERLY_QUASI_ARITHMETIC, field, f"{label} = {value}", tuple(facets)
            )
    return Classification(ArithmeticClass.ARITHMETIC, field, truncated=tuple(facets))
