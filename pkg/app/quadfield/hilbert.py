"""실수 자리와 홀수 유한 자리의 힐베르트 기호, 제곱류 키."""

from __future__ import annotations

from dataclasses import dataclass

from app.core.errors import NotAUnitError
from app.core.logger import get_logger
from app.exact.embedding import sign_of
from app.exact.tower import TowerElement
from app.quadfield.field import QuadField, quad_field
from app.quadfield.primes import PrimeIdeal, relevant_primes, residue_character, uniformizer, valuation

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class RealPlace:
    """K 의 실수 매장. conjugate 이면 √d ↦ −√d 쪽 매장입니다."""

    d: int
    conjugate: bool = False

    @property
    def field(self) -> QuadField:
        return quad_field(self.d)

    @property
    def label(self) -> str:
        return "real-" if self.conjugate else "real+"

    def sign(self, x: TowerElement) -> int:
        field = self.field
        a, b = field.components(x)
        image = field.element(a, -b if self.conjugate else b)
        return sign_of(image)


Place = PrimeIdeal | RealPlace


def real_places(field: QuadField) -> list[RealPlace]:
    if field.is_rational_field:
        return [RealPlace(field.d)]
    return [RealPlace(field.d), RealPlace(field.d, conjugate=True)]


def _split_uniformizer(x: TowerElement, prime: PrimeIdeal) -> tuple[int, TowerElement]:
    """x = π^k · u 로 나눈 (k, u)."""
    k = valuation(x, prime)
    unit = x / uniformizer(prime) ** k if k else x
    if valuation(unit, prime) != 0:
        raise NotAUnitError(f"균등화 원소로 나눈 뒤에도 단원이 아닙니다: {x}")
    return k, unit


def hilbert_symbol(x: TowerElement, y: TowerElement, place: Place) -> int:
    """(x, y)_v 를 반환합니다. 유한 자리는 홀수여야 하며 2 위의 자리는 DyadicPlaceError 입니다."""
    if x.is_zero() or y.is_zero():
        raise ValueError("힐베르트 기호의 인자는 0 이 아니어야 합니다.")
    if isinstance(place, RealPlace):
        return -1 if place.sign(x) < 0 and place.sign(y) < 0 else 1
    field = place.field
    x = field.lift_from(x)
    y = field.lift_from(y)
    alpha, u = _split_uniformizer(x, place)
    beta, w = _split_uniformizer(y, place)
    minus_one = residue_character(field.element(-1), place)
    value = 1
    if (alpha * beta) % 2:
        value *= minus_one
    if beta % 2:
        value *= residue_character(u, place)
    if alpha % 2:
        value *= residue_character(w, place)
    logger.debug("hilbert_symbol place=%s alpha=%d beta=%d value=%d", place.label, alpha, beta, value)
    return value


def square_class_key(x: TowerElement, field: QuadField) -> tuple[tuple[int, ...], tuple[str, ...]]:
    """제곱류 판별에 쓰는 키: 실수 자리 부호와 홀수 값매김 패리티가 홀수인 소 아이디얼 목록."""
    x = field.lift_from(x)
    signs = tuple(place.sign(x) for place in real_places(field))
    odd = tuple(prime.label for prime in relevant_primes(x, field) if valuation(x, prime) % 2)
    return signs, odd
