"""근호 탑(radical tower)과 그 원소의 정확한 산술.

탑 Q(g_1, ..., g_r)의 각 생성원은 g_i² = s_i 를 만족하며 s_i 는 앞선 생성원들로 표현됩니다.
원소는 생성원 부분집합(비트 마스크)에서 유리수로 가는 유한 사상으로 정규형을 가집니다.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Literal

from app.core.errors import TowerDivisionError, TowerMismatchError

Rational = int | Fraction
Terms = dict[int, Fraction]


def bit_indices(mask: int) -> list[int]:
    indices: list[int] = []
    index = 0
    while mask:
        if mask & 1:
            indices.append(index)
        mask >>= 1
        index += 1
    return indices


def split_terms(terms: Mapping[int, Fraction], flag: int) -> tuple[Terms, Terms]:
    """terms = A + B·g 로 분해합니다. flag 는 g 의 비트이며 지지집합의 최상위 비트 이상이어야 합니다."""
    lower: Terms = {}
    upper: Terms = {}
    for mask, coeff in terms.items():
        if mask & flag:
            upper[mask ^ flag] = coeff
        else:
            lower[mask] = coeff
    return lower, upper


def add_terms(left: Mapping[int, Fraction], right: Mapping[int, Fraction], sign: int = 1) -> Terms:
    out: Terms = dict(left)
    for mask, coeff in right.items():
        value = out.get(mask, Fraction(0)) + sign * coeff
        if value:
            out[mask] = value
        else:
            out.pop(mask, None)
    return out


def _scale_terms(terms: Mapping[int, Fraction], factor: Fraction) -> Terms:
    if not factor:
        return {}
    return {mask: coeff * factor for mask, coeff in terms.items()}


@dataclass(frozen=True, slots=True)
class Generator:
    """g² = square 인 생성원. prime 이 있으면 유리 소수의 근호, 없으면 형식적 생성원입니다."""

    name: str
    square: TowerElement
    prime: int | None = None

    @property
    def is_formal(self) -> bool:
        return self.prime is None


@dataclass(frozen=True, eq=False)
class Tower:
    """생성원 목록만으로 정체성이 결정되는 불변 근호 탑."""

    generators: tuple[Generator, ...] = ()
    _cache: dict[str, dict] = field(default_factory=dict, repr=False, compare=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tower):
            return NotImplemented
        return self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Tower({', '.join(self.names) or 'Q'})"

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(generator.name for generator in self.generators)

    @cached_property
    def name_index(self) -> dict[str, int]:
        return {name: index for index, name in enumerate(self.names)}

    @cached_property
    def prime_index(self) -> dict[int, int]:
        return {g.prime: index for index, g in enumerate(self.generators) if g.prime is not None}

    @cached_property
    def formal_mask(self) -> int:
        mask = 0
        for index, generator in enumerate(self.generators):
            if generator.is_formal:
                mask |= 1 << index
        return mask

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def embedding_signs(self) -> tuple[int, ...]:
        """구별된 실수 매장(모든 생성원 양수)의 부호 배정."""
        return (1,) * self.degree

    @property
    def zero(self) -> TowerElement:
        return TowerElement(self, ())

    @property
    def one(self) -> TowerElement:
        return self.rational(1)

    def rational(self, value: Rational) -> TowerElement:
        value = Fraction(value)
        return TowerElement(self, ((0, value),) if value else ())

    def generator_element(self, index: int) -> TowerElement:
        return TowerElement(self, ((1 << index, Fraction(1)),))

    def element(self, terms: Mapping[int, Rational]) -> TowerElement:
        return TowerElement.from_terms(self, {mask: Fraction(coeff) for mask, coeff in terms.items()})

    def prefix(self, length: int) -> Tower:
        if length == self.degree:
            return self
        return Tower(self.generators[:length])

    def is_prefix_of(self, other: Tower) -> bool:
        return self.degree <= other.degree and other.names[: self.degree] == self.names

    def extend(self, square: TowerElement, prime: int | None = None) -> tuple[Tower, TowerElement]:
        """square 의 제곱근을 새 최상위 생성원으로 붙인 탑과 그 생성원을 반환합니다."""
        square = square.lift(self)
        name = f"sqrt({prime})" if prime is not None else f"sqrt({format_element(square)})"
        if name in self.name_index:
            raise TowerMismatchError(f"이미 존재하는 생성원입니다: {name}")
        tower = Tower(self.generators + (Generator(name=name, square=square, prime=prime),))
        return tower, tower.generator_element(tower.degree - 1)

    @classmethod
    def from_primes(cls, primes: list[int] | tuple[int, ...]) -> Tower:
        tower = cls()
        for prime in primes:
            tower, _ = tower.extend(tower.rational(prime), prime=prime)
        return tower

    def monomial_product(self, left: int, right: int) -> Terms:
        """두 단항식 마스크의 곱을 정규형 항으로 반환합니다. 결과는 캐시되므로 변경하면 안 됩니다."""
        cache = self._cache.setdefault("monomials", {})
        key = (left, right) if left <= right else (right, left)
        cached = cache.get(key)
        if cached is not None:
            return cached
        common = left & right
        if not common:
            result: Terms = {left | right: Fraction(1)}
        else:
            flag = 1 << (common.bit_length() - 1)
            rest = self.monomial_product(left ^ flag, right ^ flag)
            square = dict(self.generators[common.bit_length() - 1].square.terms)
            result = multiply_terms(self, rest, square)
        cache[key] = result
        return result


def join_towers(left: Tower, right: Tower) -> Tower:
    """접두 관계인 두 탑 중 긴 쪽을 반환합니다."""
    if left is right or left.is_prefix_of(right):
        return right
    if right.is_prefix_of(left):
        return left
    raise TowerMismatchError(f"접두 관계가 아닌 탑입니다: {left!r} / {right!r}")


def multiply_terms(tower: Tower, left: Mapping[int, Fraction], right: Mapping[int, Fraction]) -> Terms:
    out: Terms = {}
    for left_mask, left_coeff in left.items():
        for right_mask, right_coeff in right.items():
            factor = left_coeff * right_coeff
            for mask, coeff in tower.monomial_product(left_mask, right_mask).items():
                out[mask] = out.get(mask, Fraction(0)) + factor * coeff
    return {mask: coeff for mask, coeff in out.items() if coeff}


def inverse_terms(tower: Tower, terms: Mapping[int, Fraction]) -> Terms:
    """(A + B·g)⁻¹ = (A − B·g) / (A² − s·B²) 를 최상위 생성원부터 재귀적으로 적용합니다."""
    if not terms:
        raise TowerDivisionError("0 으로 나눌 수 없습니다.")
    support = 0
    for mask in terms:
        support |= mask
    if support == 0:
        return {0: 1 / terms[0]}
    flag = 1 << (support.bit_length() - 1)
    lower, upper = split_terms(terms, flag)
    square = dict(tower.generators[support.bit_length() - 1].square.terms)
    norm = add_terms(
        multiply_terms(tower, lower, lower),
        multiply_terms(tower, square, multiply_terms(tower, upper, upper)),
        sign=-1,
    )
    if not norm:
        raise TowerDivisionError("생성원 사이에 감지되지 않은 종속 관계가 있어 역원을 구할 수 없습니다.")
    conjugate = dict(lower)
    for mask, coeff in upper.items():
        conjugate[mask | flag] = -coeff
    return multiply_terms(tower, conjugate, inverse_terms(tower, norm))


@dataclass(frozen=True, slots=True, eq=False)
class TowerElement:
    """탑 위의 정확한 원소. terms 는 마스크 오름차순이며 0 계수를 담지 않습니다."""

    tower: Tower
    terms: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_terms(cls, tower: Tower, terms: Mapping[int, Fraction]) -> TowerElement:
        return cls(tower, tuple(sorted((mask, coeff) for mask, coeff in terms.items() if coeff)))

    @property
    def term_map(self) -> Terms:
        return dict(self.terms)

    @property
    def support_mask(self) -> int:
        mask = 0
        for term_mask, _ in self.terms:
            mask |= term_mask
        return mask

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def has_formal_support(self) -> bool:
        return bool(self.support_mask & self.tower.formal_mask)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"유리수가 아닌 원소입니다: {self}")
        return self.terms[0][1] if self.terms else Fraction(0)

    def coefficient(self, mask: int) -> Fraction:
        for term_mask, coeff in self.terms:
            if term_mask == mask:
                return coeff
        return Fraction(0)

    def support_primes(self) -> tuple[int, ...]:
        primes = []
        for index in bit_indices(self.support_mask):
            prime = self.tower.generators[index].prime
            if prime is not None:
                primes.append(prime)
        return tuple(sorted(primes))

    def lift(self, tower: Tower) -> TowerElement:
        """접두 탑의 원소를 더 긴 탑의 원소로 옮깁니다."""
        if tower is self.tower or tower == self.tower:
            return self if tower is self.tower else TowerElement(tower, self.terms)
        if not self.tower.is_prefix_of(tower):
            raise TowerMismatchError(f"{self.tower!r} 는 {tower!r} 의 접두 탑이 아닙니다.")
        return TowerElement(tower, self.terms)

    def _operands(self, other: object) -> tuple[Tower, Terms, Terms] | None:
        if isinstance(other, TowerElement):
            tower = join_towers(self.tower, other.tower)
            return tower, self.term_map, other.term_map
        if isinstance(other, int | Fraction):
            value = Fraction(other)
            return self.tower, self.term_map, ({0: value} if value else {})
        return None

    def __add__(self, other: object) -> TowerElement:
        operands = self._operands(other)
        if operands is None:
            return NotImplemented
        tower, left, right = operands
        return TowerElement.from_terms(tower, add_terms(left, right))

    __radd__ = __add__

    def __sub__(self, other: object) -> TowerElement:
        operands = self._operands(other)
        if operands is None:
            return NotImplemented
        tower, left, right = operands
        return TowerElement.from_terms(tower, add_terms(left, right, sign=-1))

    def __rsub__(self, other: object) -> TowerElement:
        operands = self._operands(other)
        if operands is None:
            return NotImplemented
        tower, left, right = operands
        return TowerElement.from_terms(tower, add_terms(right, left, sign=-1))

    def __mul__(self, other: object) -> TowerElement:
        if isinstance(other, int | Fraction):
            return TowerElement.from_terms(self.tower, _scale_terms(self.term_map, Fraction(other)))
        operands = self._operands(other)
        if operands is None:
            return NotImplemented
        tower, left, right = operands
        return TowerElement.from_terms(tower, multiply_terms(tower, left, right))

    __rmul__ = __mul__

    def inverse(self) -> TowerElement:
        return TowerElement.from_terms(self.tower, inverse_terms(self.tower, self.term_map))

    def __truediv__(self, other: object) -> TowerElement:
        if isinstance(other, int | Fraction):
            if not other:
                raise TowerDivisionError("0 으로 나눌 수 없습니다.")
            return self * (1 / Fraction(other))
        if isinstance(other, TowerElement):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: object) -> TowerElement:
        if isinstance(other, int | Fraction):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self) -> TowerElement:
        return TowerElement(self.tower, tuple((mask, -coeff) for mask, coeff in self.terms))

    def __pos__(self) -> TowerElement:
        return self

    def __pow__(self, exponent: int) -> TowerElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.tower.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TowerElement):
            if self.tower.is_prefix_of(other.tower) or other.tower.is_prefix_of(self.tower):
                return self.terms == other.terms
            return False
        if isinstance(other, int | Fraction):
            return self.is_rational() and self.rational_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.rational_value())
        return hash(self.terms)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"TowerElement({format_element(self)})"


def arithmetic(x: TowerElement, y: TowerElement, op: Literal["add", "sub", "mul", "div"]) -> TowerElement:
    """같은(또는 접두 관계인) 탑의 두 원소에 사칙연산을 적용합니다."""
    match op:
        case "add":
            return x + y
        case "sub":
            return x - y
        case "mul":
            return x * y
        case "div":
            return x / y
    raise ValueError(f"지원하지 않는 연산입니다: {op}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _monomial_name(tower: Tower, mask: int) -> str:
    return "*".join(tower.generators[index].name for index in bit_indices(mask))


def format_element(x: TowerElement, *, compact: bool = False) -> str:
    """차수와 생성원 색인 순으로 정렬된 정규 EXPR 문자열을 만듭니다."""
    if not x.terms:
        return "0"
    ordered = sorted(x.terms, key=lambda item: (bin(item[0]).count("1"), bit_indices(item[0])))
    pieces: list[str] = []
    for position, (mask, coeff) in enumerate(ordered):
        magnitude = abs(coeff)
        if mask == 0:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = _monomial_name(x.tower, mask)
        else:
            body = f"{format_rational(magnitude)}*{_monomial_name(x.tower, mask)}"
        if position == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"{'-' if coeff < 0 else '+'}{body}" if compact else f" {'-' if coeff < 0 else '+'} {body}")
    return "".join(pieces)
