"""실수 매장에서의 인증된 구간 평가와 갈루아 켤레."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import isqrt

from app.core.errors import FormalGeneratorError, InconsistentEmbeddingError, PrecisionExhaustedError
from app.core.logger import get_logger
from app.core.precision_policy import PrecisionPolicy, get_precision_policy
from app.exact.tower import Tower, TowerElement

logger = get_logger(__name__)

Signs = tuple[int, ...]
Interval = tuple[Fraction, Fraction]


def _floor_dyadic(value: Fraction, bits: int) -> Fraction:
    return Fraction((value.numerator << bits) // value.denominator, 1 << bits)


def _ceil_dyadic(value: Fraction, bits: int) -> Fraction:
    return Fraction(-((-value.numerator << bits) // value.denominator), 1 << bits)


def _sqrt_interval(low: Fraction, high: Fraction, bits: int) -> Interval:
    low = max(low, Fraction(0))
    scale = 1 << (2 * bits)
    lower = isqrt((low.numerator * scale) // low.denominator)
    upper_square = -((-high.numerator * scale) // high.denominator)
    upper = isqrt(upper_square)
    if upper * upper < upper_square:
        upper += 1
    return Fraction(lower, 1 << bits), Fraction(upper, 1 << bits)


def _mul_interval(left: Interval, right: Interval, bits: int) -> Interval:
    products = (left[0] * right[0], left[0] * right[1], left[1] * right[0], left[1] * right[1])
    return _floor_dyadic(min(products), bits), _ceil_dyadic(max(products), bits)


def _normalize_signs(tower: Tower, signs: Sequence[int] | None) -> Signs:
    if signs is None:
        return tower.embedding_signs
    normalized = tuple(1 if sign >= 0 else -1 for sign in signs[: tower.degree])
    if len(normalized) < tower.degree:
        normalized += (1,) * (tower.degree - len(normalized))
    return normalized


def _generator_intervals(tower: Tower, signs: Signs, bits: int) -> list[Interval]:
    cache = tower._cache.setdefault("intervals", {})
    key = (signs, bits)
    cached = cache.get(key)
    if cached is not None:
        return cached
    intervals: list[Interval] = []
    for index, generator in enumerate(tower.generators):
        if generator.prime is not None:
            low, high = _sqrt_interval(Fraction(generator.prime), Fraction(generator.prime), bits)
        else:
            prefix_signs = signs[:index]
            if sign_of(generator.square, prefix_signs) <= 0:
                raise InconsistentEmbeddingError(
                    f"켤레 매장에서 생성원 {generator.name} 의 제곱이 양수가 아닙니다: signs={prefix_signs}"
                )
            square_low, square_high = _evaluate(generator.square, prefix_signs, bits, intervals)
            low, high = _sqrt_interval(square_low, square_high, bits)
        intervals.append((low, high) if signs[index] > 0 else (-high, -low))
    cache[key] = intervals
    return intervals


def _evaluate(x: TowerElement, signs: Signs, bits: int, intervals: list[Interval] | None = None) -> Interval:
    if intervals is None:
        intervals = _generator_intervals(x.tower, signs, bits)
    total_low = Fraction(0)
    total_high = Fraction(0)
    for mask, coeff in x.terms:
        term: Interval = (coeff, coeff)
        index = 0
        while mask:
            if mask & 1:
                term = _mul_interval(term, intervals[index], bits)
            mask >>= 1
            index += 1
        total_low += term[0]
        total_high += term[1]
    return total_low, total_high


def raw_interval(x: TowerElement, signs: Sequence[int] | None, working_bits: int) -> Interval:
    """작업 정밀도 working_bits 로 x 를 감싸는 구간을 계산합니다(폭 보장 없음)."""
    if x.is_rational():
        value = x.rational_value()
        return value, value
    return _evaluate(x, _normalize_signs(x.tower, signs), working_bits)


def embed_interval(
    x: TowerElement,
    signs: Sequence[int] | None = None,
    bits: int = 64,
    *,
    policy: PrecisionPolicy | None = None,
) -> Interval:
    """폭이 2^(-bits) 이하인 이진 격자 구간을 반환합니다. 정밀도를 높이면 구간은 포개집니다."""
    if x.is_rational():
        value = x.rational_value()
        return value, value
    resolved = policy or get_precision_policy()
    normalized = _normalize_signs(x.tower, signs)
    working = bits + resolved.guard_bits
    ceiling = max(resolved.max_bits, 4 * bits)
    while working <= ceiling:
        low, high = _evaluate(x, normalized, working)
        cell = (low.numerator << bits) // low.denominator
        cell_low = Fraction(cell, 1 << bits)
        cell_high = Fraction(cell + 1, 1 << bits)
        if cell_low <= low and high <= cell_high:
            return cell_low, cell_high
        working *= 2
    raise PrecisionExhaustedError(f"{x} 의 구간을 {bits} 비트 폭으로 좁히지 못했습니다.")


def sign_of(
    x: TowerElement,
    signs: Sequence[int] | None = None,
    *,
    policy: PrecisionPolicy | None = None,
) -> int:
    """정확한 0 판정 뒤 구간을 세분하여 인증된 부호를 반환합니다."""
    if x.is_zero():
        return 0
    if x.is_rational():
        return 1 if x.rational_value() > 0 else -1
    resolved = policy or get_precision_policy()
    normalized = _normalize_signs(x.tower, signs)
    working = resolved.start_bits
    while working <= resolved.max_bits:
        low, high = _evaluate(x, normalized, working)
        if low > 0:
            return 1
        if high < 0:
            return -1
        working *= 2
        logger.debug("sign_of refine bits=%d element=%s", working, x)
    raise PrecisionExhaustedError(f"{resolved.max_bits} 비트 안에서 {x} 의 부호를 확정하지 못했습니다.")


def to_float(x: TowerElement, signs: Sequence[int] | None = None) -> float:
    if x.is_rational():
        return float(x.rational_value())
    low, high = raw_interval(x, signs, 96)
    return float((low + high) / 2)


def _flip_mask(tower: Tower, flips: Iterable[int | str]) -> int:
    mask = 0
    for flip in flips:
        index = tower.name_index.get(flip) if isinstance(flip, str) else tower.prime_index.get(flip)
        if index is not None:
            mask |= 1 << index
    return mask


def conjugation_signs(tower: Tower, flips: Iterable[int | str]) -> Signs:
    """flips 에 속한 생성원만 음수로 보내는 부호 배정을 만듭니다."""
    mask = _flip_mask(tower, flips)
    return tuple(-1 if mask >> index & 1 else 1 for index in range(tower.degree))


def galois_conjugate(x: TowerElement, flips: Iterable[int | str]) -> TowerElement:
    """유리 근호 부분체에서 flips 에 속한 소수 근호의 부호를 뒤집은 켤레를 반환합니다."""
    if x.has_formal_support():
        raise FormalGeneratorError(f"형식적 생성원을 포함한 원소에는 켤레를 정의하지 않습니다: {x}")
    mask = _flip_mask(x.tower, flips)
    terms = tuple((term, -coeff if (term & mask).bit_count() % 2 else coeff) for term, coeff in x.terms)
    return TowerElement(x.tower, terms)


def characteristic_polynomial(x: TowerElement) -> tuple[Fraction, ...]:
    """지지 소수의 모든 부호 반전에 대한 곱 ∏(t − σ(x)) 의 계수를 낮은 차수부터 반환합니다."""
    primes = x.support_primes()
    coefficients: list[TowerElement] = [x.tower.one]
    for flips in itertools.chain.from_iterable(itertools.combinations(primes, k) for k in range(len(primes) + 1)):
        root = galois_conjugate(x, flips)
        shifted = [x.tower.zero, *coefficients]
        for index, coeff in enumerate(coefficients):
            shifted[index] = shifted[index] - root * coeff
        coefficients = shifted
    return tuple(coeff.rational_value() for coeff in coefficients)


def is_algebraic_integer(x: TowerElement) -> bool:
    return all(coeff.denominator == 1 for coeff in characteristic_polynomial(x))
