"""이차형식의 불변량: 판별식 제곱류, 실수 signature, 하세 불변량, 등거리 판정."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from app.core.config import get_settings
from app.core.errors import FieldMismatchError
from app.core.logger import get_logger
from app.exact.tower import TowerElement
from app.qforms.forms import DiagonalForm, QuadraticForm, diagonalize
from app.quadfield.field import QuadField, is_square, unit_square_classes
from app.quadfield.hilbert import Place, RealPlace, hilbert_symbol, real_places, square_class_key
from app.quadfield.primes import PrimeIdeal, dyadic_generators, prime_generator, relevant_primes, valuation
from app.schemas.enums import IsometryVerdict

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class SquareClass:
    """K*/K*² 의 원소. key 는 (실수 자리 부호, 홀수 값매김 소 아이디얼) 이고 representative 는 정규 대표원입니다."""

    key: tuple[tuple[int, ...], tuple[str, ...]]
    representative: TowerElement
    exact: bool = True

    def __str__(self) -> str:
        return str(self.representative)


def same_square_class(x: TowerElement, y: TowerElement, field: QuadField) -> bool:
    holds, _ = is_square(field.lift_from(x) * field.lift_from(y), field)
    return holds


def _dyadic_classes(field: QuadField) -> list[TowerElement]:
    generators = dyadic_generators(field, get_settings().PRIME_GENERATOR_SEARCH_BOUND)
    classes = []
    for count in range(len(generators) + 1):
        for chosen in itertools.combinations(generators, count):
            value = field.element(1)
            for generator in chosen:
                value = value * generator
            classes.append(value)
    return classes


def det_square_class(value: TowerElement, field: QuadField) -> SquareClass:
    """홀수 값매김 소 아이디얼의 생성원 곱에 단위류와 2 위의 생성원을 곱한 대표원을 찾습니다."""
    value = field.lift_from(value)
    key = square_class_key(value, field)
    base = field.element(1)
    exact = True
    for prime in relevant_primes(value, field):
        if valuation(value, prime) % 2 == 0:
            continue
        generator = prime_generator(prime, get_settings().PRIME_GENERATOR_SEARCH_BOUND)
        if generator is None:
            exact = False
            break
        base = base * generator
    if exact:
        remainder = value / base
        for unit in unit_square_classes(field):
            for dyadic in _dyadic_classes(field):
                candidate = unit * dyadic
                if same_square_class(remainder, candidate, field):
                    return SquareClass(key, base * candidate)
    return SquareClass(key, value, exact=False)


def hasse_invariant(form: DiagonalForm, place: Place) -> int:
    """∏_{i<j} (a_i, a_j)_v."""
    value = 1
    for left, right in itertools.combinations(form.coeffs, 2):
        value *= hilbert_symbol(left, right, place)
    return value


def real_signature(form: DiagonalForm, place: RealPlace) -> tuple[int, int]:
    signs = [place.sign(coeff) for coeff in form.coeffs]
    return signs.count(1), signs.count(-1)


def odd_places(coefficients: Iterable[TowerElement], field: QuadField) -> list[PrimeIdeal]:
    """계수들의 지지에 나타나는 홀수 소 아이디얼, (p, root) 순."""
    found: dict[str, PrimeIdeal] = {}
    for coeff in coefficients:
        for prime in relevant_primes(coeff, field):
            found.setdefault(prime.label, prime)
    return sorted(found.values(), key=lambda prime: prime.sort_key)


@dataclass(frozen=True, slots=True)
class FormInvariants:
    dimension: int
    det_class: SquareClass
    signatures: dict[str, tuple[int, int]]
    hasse: dict[str, int] = field(default_factory=dict)


def form_invariants(
    form: QuadraticForm,
    places: Sequence[PrimeIdeal] | None = None,
    diagonal: DiagonalForm | None = None,
) -> FormInvariants:
    diagonal = diagonal or diagonalize(form)
    odd = list(places) if places is not None else odd_places(diagonal.coeffs, form.field)
    signatures = {place.label: real_signature(diagonal, place) for place in real_places(form.field)}
    hasse = {place.label: hasse_invariant(diagonal, place) for place in real_places(form.field)}
    hasse.update({prime.label: hasse_invariant(diagonal, prime) for prime in odd})
    det = form.field.element(1)
    for coeff in diagonal.coeffs:
        det = det * coeff
    return FormInvariants(form.dimension, det_square_class(det, form.field), signatures, hasse)


def has_unique_dyadic_place(field: QuadField) -> bool:
    return field.is_rational_field or field.d % 8 != 1


@dataclass(frozen=True, slots=True)
class IsometryResult:
    verdict: IsometryVerdict
    witness: str | None = None
    detail: str | None = None


def isometric_over_K(first: QuadraticForm, second: QuadraticForm) -> IsometryResult:  # noqa: N802
    """차원, 판별식 제곱류, 실수 signature, 홀수 자리 하세 불변량을 차례로 비교합니다."""
    if first.field != second.field:
        raise FieldMismatchError(f"서로 다른 체 위의 형식입니다: {first.field.label} / {second.field.label}")
    field_ = first.field
    if first.dimension != second.dimension:
        return IsometryResult(IsometryVerdict.NOT_ISOMETRIC, "dimension", f"{first.dimension} != {second.dimension}")
    left = diagonalize(first)
    right = diagonalize(second)
    det_left = _product(left.coeffs, field_)
    det_right = _product(right.coeffs, field_)
    if not same_square_class(det_left, det_right, field_):
        return IsometryResult(IsometryVerdict.NOT_ISOMETRIC, _det_witness(det_left / det_right, field_), "det")
    for place in real_places(field_):
        if real_signature(left, place) != real_signature(right, place):
            detail = f"{real_signature(left, place)} != {real_signature(right, place)}"
            return IsometryResult(IsometryVerdict.NOT_ISOMETRIC, place.label, detail)
    for prime in odd_places((*left.coeffs, *right.coeffs), field_):
        h_left, h_right = hasse_invariant(left, prime), hasse_invariant(right, prime)
        if h_left != h_right:
            logger.info("isometric_over_K hasse mismatch place=%s left=%d right=%d", prime.label, h_left, h_right)
            return IsometryResult(IsometryVerdict.NOT_ISOMETRIC, prime.label, f"hasse {h_left} != {h_right}")
    if has_unique_dyadic_place(field_):
        return IsometryResult(IsometryVerdict.ISOMETRIC)
    return IsometryResult(IsometryVerdict.INCONCLUSIVE, detail="2 위의 자리가 둘이라 곱 공식으로 닫히지 않습니다.")


def _product(values: Iterable[TowerElement], field_: QuadField) -> TowerElement:
    result = field_.element(1)
    for value in values:
        result = result * value
    return result


def _det_witness(ratio: TowerElement, field_: QuadField) -> str:
    """판별식 비가 제곱이 아님을 보이는 자리. 찾지 못하면 'det'."""
    for place in real_places(field_):
        if place.sign(ratio) < 0:
            return place.label
    for prime in relevant_primes(ratio, field_):
        if valuation(ratio, prime) % 2:
            return prime.label
    return "det"
