"""홀수 소 아이디얼: 분해, 값매김, 잉여 지표."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from math import lcm

from sympy import factorint, isprime, legendre_symbol, multiplicity, sqrt_mod

from app.core.errors import DyadicPlaceError, NotAUnitError
from app.exact.tower import TowerElement
from app.quadfield.field import QuadField, norm_trace, quad_field


class PrimeKind(StrEnum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"
    RATIONAL = "rational"


@dataclass(frozen=True, slots=True)
class PrimeIdeal:
    """(p, √d − root) 로 주어지는 홀수 소 아이디얼. 관성 소수는 root 가 없습니다."""

    d: int
    p: int
    kind: PrimeKind
    root: int | None
    residue_size: int

    @property
    def field(self) -> QuadField:
        return quad_field(self.d)

    @property
    def ramification(self) -> int:
        return 2 if self.kind is PrimeKind.RAMIFIED else 1

    @property
    def sort_key(self) -> tuple[int, int]:
        return self.p, self.root or 0

    @property
    def label(self) -> str:
        if self.kind is PrimeKind.SPLIT:
            return f"p{self.p},{self.root}"
        return f"p{self.p}"


def _check_odd_prime(p: int) -> None:
    if p == 2:
        raise DyadicPlaceError("2 위의 자리는 다루지 않습니다.")
    if p < 2 or not isprime(p):
        raise ValueError(f"홀수 소수가 필요합니다: {p}")


def factor_rational_prime(p: int, field: QuadField) -> list[tuple[PrimeIdeal, int]]:
    """홀수 소수 p 의 K 에서의 소 아이디얼 분해를 반환합니다."""
    _check_odd_prime(p)
    if field.is_rational_field:
        return [(PrimeIdeal(field.d, p, PrimeKind.RATIONAL, None, p), 1)]
    symbol = legendre_symbol(field.d % p, p)
    if symbol == 0:
        return [(PrimeIdeal(field.d, p, PrimeKind.RAMIFIED, 0, p), 2)]
    if symbol == -1:
        return [(PrimeIdeal(field.d, p, PrimeKind.INERT, None, p * p), 1)]
    root = int(sqrt_mod(field.d % p, p))
    roots = sorted({root, p - root})
    return [(PrimeIdeal(field.d, p, PrimeKind.SPLIT, r, p), 1) for r in roots]


def _integral_parts(x: TowerElement, field: QuadField) -> tuple[int, int, int]:
    """x = (a + b√d)/c 인 정수 a, b 와 양의 정수 c."""
    a, b = field.components(x)
    c = lcm(a.denominator, b.denominator)
    return int(a * c), int(b * c), c


def _vp(value: int, p: int) -> int:
    return multiplicity(p, abs(value)) if value else 1 << 30


def valuation(x: TowerElement, prime: PrimeIdeal) -> int:
    """v_P(x). 정수 부분의 p-내용을 떼어낸 뒤 노름과 잉여 판정으로 계산합니다."""
    if x.is_zero():
        raise ValueError("0 의 값매김은 정의되지 않습니다.")
    field = prime.field
    a, b, c = _integral_parts(x, field)
    p = prime.p
    e = prime.ramification
    if prime.kind is PrimeKind.RATIONAL:
        return _vp(a, p) - _vp(c, p)
    k = min(_vp(a, p), _vp(b, p))
    a1, b1 = a // p**k, b // p**k
    inner = 0
    if prime.kind is PrimeKind.SPLIT:
        if (a1 + b1 * prime.root) % p == 0:
            inner = _vp(a1 * a1 - field.d * b1 * b1, p)
    elif prime.kind is PrimeKind.RAMIFIED:
        inner = 0 if a1 % p else 1
    return e * k + inner - e * _vp(c, p)


def _legendre(value: int, p: int) -> int:
    return int(legendre_symbol(value % p, p))


def residue_character(x: TowerElement, prime: PrimeIdeal) -> int:
    """잉여체에서 x 의 잔여류가 0 이 아닌 제곱이면 +1, 아니면 −1."""
    if valuation(x, prime) != 0:
        raise NotAUnitError(f"{x} 는 {prime.label} 에서 단원이 아닙니다.")
    field = prime.field
    p = prime.p
    a, b, c = _integral_parts(x, field)
    if prime.kind is PrimeKind.RATIONAL:
        reduced = Fraction(a, c)
        return _legendre(reduced.numerator * reduced.denominator, p)
    if prime.kind is PrimeKind.INERT:
        norm, _ = norm_trace(x, field)
        return _legendre(norm.numerator * norm.denominator, p)
    k = min(_vp(a, p), _vp(b, p))
    a1, b1 = a // p**k, b // p**k
    c1 = c // p ** _vp(c, p)
    if prime.kind is PrimeKind.RAMIFIED:
        return _legendre(a1 * c1, p)
    image = a1 + b1 * prime.root
    if image % p:
        return _legendre(image * c1, p)
    norm = a1 * a1 - field.d * b1 * b1
    norm //= p ** _vp(norm, p)
    return _legendre(norm * (a1 - b1 * prime.root) * c1, p)


def uniformizer(prime: PrimeIdeal) -> TowerElement:
    """비분기 소수는 p, 분기 소수는 √d 를 균등화 원소로 씁니다."""
    field = prime.field
    if prime.kind is PrimeKind.RAMIFIED:
        return field.sqrt_d
    return field.element(prime.p)


def relevant_primes(x: TowerElement, field: QuadField) -> list[PrimeIdeal]:
    """v_P(x) ≠ 0 인 홀수 소 아이디얼 목록을 (p, root) 순으로 반환합니다."""
    if x.is_zero():
        return []
    a, b, c = _integral_parts(x, field)
    candidates = set(factorint(c)) | set(factorint(abs(a * a - field.d * b * b)))
    found: list[PrimeIdeal] = []
    for p in sorted(candidates):
        if p == 2:
            continue
        for prime, _ in factor_rational_prime(p, field):
            if valuation(x, prime):
                found.append(prime)
    return sorted(found, key=lambda item: item.sort_key)


def _search_order(bound: int) -> list[tuple[int, int]]:
    pairs = []
    for y in range(bound + 1):
        for magnitude in range(bound + 1):
            for x in (magnitude, -magnitude) if magnitude else (0,):
                pairs.append((x, y))
    return pairs


def prime_generator(prime: PrimeIdeal, bound: int = 60) -> TowerElement | None:
    """주 아이디얼이면 x + y·ω 꼴의 생성원을 유한 탐색으로 찾고, 없으면 None."""
    field = prime.field
    if prime.kind in (PrimeKind.RATIONAL, PrimeKind.INERT):
        return field.element(prime.p)
    if prime.kind is PrimeKind.RAMIFIED and field.d == prime.p:
        return field.sqrt_d
    omega = field.ring_generator
    for x, y in _search_order(bound):
        candidate = field.element(x) + omega * y
        if candidate.is_zero():
            continue
        norm, _ = norm_trace(candidate, field)
        if abs(norm) == prime.p and valuation(candidate, prime) == 1:
            return candidate
    return None


def dyadic_generators(field: QuadField, bound: int = 60) -> list[TowerElement]:
    """2 위의 소 아이디얼들의 생성원(찾은 것만)."""
    if field.is_rational_field or field.d % 8 == 5:
        return [field.element(2)]
    omega = field.ring_generator
    found: list[TowerElement] = []
    for x, y in _search_order(bound):
        candidate = field.element(x) + omega * y
        if candidate.is_zero():
            continue
        norm, _ = norm_trace(candidate, field)
        if abs(norm) == 2:
            found.append(candidate)
            if field.d % 8 == 1:
                a, b = field.components(candidate)
                found.append(field.element(a, -b))
            break
    return found
