"""실 이차체 K = Q(√d) 와 그 원소에 대한 정수론적 판정."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import isqrt, prod

from sympy import factorint
from sympy.solvers.diophantine.diophantine import diop_DN

from app.core.errors import FieldMismatchError
from app.core.logger import get_logger
from app.exact.embedding import to_float
from app.exact.radicals import coerce
from app.exact.tower import Tower, TowerElement

logger = get_logger(__name__)


def _is_squarefree(value: int) -> bool:
    return all(exponent == 1 for exponent in factorint(value).values())


@dataclass(frozen=True)
class QuadField:
    """d = 1 이면 유리수체 Q 자체를 뜻합니다."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 1 or not _is_squarefree(self.d):
            raise ValueError(f"d 는 1 이상의 제곱 인수 없는 정수여야 합니다: {self.d}")

    @property
    def is_rational_field(self) -> bool:
        return self.d == 1

    @cached_property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(factorint(self.d)))

    @cached_property
    def tower(self) -> Tower:
        return Tower.from_primes(self.primes)

    @cached_property
    def sqrt_d(self) -> TowerElement:
        element = self.tower.one
        for index in range(self.tower.degree):
            element = element * self.tower.generator_element(index)
        return element

    @property
    def label(self) -> str:
        return "Q" if self.is_rational_field else f"Q(sqrt {self.d})"

    def element(self, a: int | Fraction, b: int | Fraction = 0) -> TowerElement:
        """a + b·√d 를 만듭니다."""
        return self.tower.rational(a) + self.sqrt_d * Fraction(b)

    @cached_property
    def ring_generator(self) -> TowerElement:
        """정수환 생성원 ω. d ≡ 1 (mod 4) 이면 (1+√d)/2, 아니면 √d 입니다."""
        if self.is_rational_field:
            return self.tower.one
        if self.d % 4 == 1:
            return self.element(Fraction(1, 2), Fraction(1, 2))
        return self.sqrt_d

    def components(self, x: TowerElement) -> tuple[Fraction, Fraction]:
        """x = A + B·√d 의 (A, B) 를 반환합니다. x 가 K 에 속하지 않으면 FieldMismatchError."""
        if x.has_formal_support():
            raise FieldMismatchError(f"형식적 생성원을 포함한 원소는 {self.label} 에 속하지 않습니다: {x}")
        d_mask = 0
        if not self.is_rational_field:
            for prime in self.primes:
                index = x.tower.prime_index.get(prime)
                if index is None:
                    d_mask = -1
                    break
                d_mask |= 1 << index
        rational = Fraction(0)
        radical = Fraction(0)
        for mask, coeff in x.terms:
            if mask == 0:
                rational = coeff
            elif mask == d_mask:
                radical = coeff
            else:
                raise FieldMismatchError(f"{x} 는 {self.label} 의 원소가 아닙니다.")
        return rational, radical

    def contains(self, x: TowerElement) -> bool:
        try:
            self.components(x)
        except FieldMismatchError:
            return False
        return True

    def to_field(self, x: TowerElement) -> TowerElement:
        """x 를 이 체의 고유 탑 원소로 옮깁니다."""
        a, b = self.components(x)
        return self.element(a, b)

    def lift_from(self, x: TowerElement) -> TowerElement:
        """다른 탑에서 온 원소를 이 체로 강제 변환합니다."""
        if self.contains(x):
            return self.to_field(x)
        return self.to_field(coerce(x, self.tower))

    @cached_property
    def fundamental_unit(self) -> TowerElement:
        """정수환의 기본 단위 ε > 1. 일반화 Pell 방정식의 기본해들 가운데 최소값입니다."""
        if self.is_rational_field:
            raise ValueError("Q 에는 기본 단위가 없습니다.")
        candidates: list[TowerElement] = []
        equations = [(1, 1), (-1, 1)]
        if self.d % 4 == 1:
            equations += [(4, 2), (-4, 2)]
        for rhs, divisor in equations:
            for x, y in diop_DN(self.d, rhs):
                x, y = abs(int(x)), abs(int(y))
                if y == 0:
                    continue
                candidates.append(self.element(Fraction(x, divisor), Fraction(y, divisor)))
        unit = min(candidates, key=to_float)
        logger.debug("fundamental_unit d=%d unit=%s", self.d, unit)
        return unit


@lru_cache
def quad_field(d: int) -> QuadField:
    """QuadField 인스턴스를 캐싱하여 반환합니다."""
    return QuadField(d)


def field_of(*elements: TowerElement) -> QuadField:
    """원소들이 함께 놓이는 가장 작은 실 이차체를 추정합니다."""
    radicand = 1
    for element in elements:
        if element.has_formal_support():
            raise FieldMismatchError(f"형식적 생성원을 포함한 원소입니다: {element}")
        for mask, _ in element.terms:
            if mask == 0:
                continue
            value = 1
            index = 0
            while mask:
                if mask & 1:
                    value *= element.tower.generators[index].prime or 1
                mask >>= 1
                index += 1
            if radicand not in (1, value):
                raise FieldMismatchError(f"여러 근호를 가진 원소는 이차체에 속하지 않습니다: {element}")
            radicand = value
    return quad_field(radicand)


def home_field(x: TowerElement) -> QuadField:
    """x 가 만들어진 탑의 이차체. 탑이 이차체가 아니거나 x 를 담지 못하면 field_of 로 추정합니다."""
    primes = [generator.prime for generator in x.tower.generators]
    if primes and all(primes) and not x.has_formal_support():
        candidate = quad_field(prod(primes))
        if candidate.contains(x):
            return candidate
    return field_of(x)


def norm_trace(x: TowerElement, field: QuadField | None = None) -> tuple[Fraction, Fraction]:
    """N(x) = x·σ(x), Tr(x) = x + σ(x)."""
    field = field or home_field(x)
    a, b = field.components(x)
    return a * a - field.d * b * b, 2 * a


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    numerator = isqrt(value.numerator)
    denominator = isqrt(value.denominator)
    if numerator * numerator == value.numerator and denominator * denominator == value.denominator:
        return Fraction(numerator, denominator)
    return None


def is_square(x: TowerElement, field: QuadField | None = None) -> tuple[bool, TowerElement | None]:
    """x = A + B√d 가 K 의 제곱인지 판정하고, 그렇다면 제곱근 하나를 함께 반환합니다."""
    field = field or home_field(x)
    a, b = field.components(x)
    if b == 0:
        root = _rational_sqrt(a)
        if root is not None:
            return True, field.element(root)
        if not field.is_rational_field:
            root = _rational_sqrt(a / field.d)
            if root is not None:
                return True, field.element(0, root)
        return False, None
    reduced = _rational_sqrt(a * a - field.d * b * b)
    if reduced is None:
        return False, None
    for candidate in ((a + reduced) / 2, (a - reduced) / 2):
        head = _rational_sqrt(candidate)
        if head:
            return True, field.element(head, b / (2 * head))
    return False, None


def is_integral(x: TowerElement, field: QuadField | None = None) -> bool:
    """최소다항식이 Z[t] 에 있는지, 즉 대각합과 노름이 정수인지 판정합니다."""
    norm, trace = norm_trace(x, field)
    return norm.denominator == 1 and trace.denominator == 1


def unit_square_classes(field: QuadField) -> list[TowerElement]:
    """단위군을 제곱으로 나눈 대표 {1, −1, ε, −ε} (Q 이면 {1, −1})."""
    if field.is_rational_field:
        return [field.element(1), field.element(-1)]
    unit = field.fundamental_unit
    return [field.element(1), field.element(-1), unit, -unit]
