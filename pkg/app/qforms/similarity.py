"""K 위의 닮음 판정: Q ≅ λ·Q′ 인 λ ≠ 0 이 있는지."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from app.core.config import get_settings
from app.core.errors import DimensionMismatchError, FieldMismatchError
from app.core.logger import get_logger
from app.exact.expr import format_expr
from app.exact.tower import TowerElement
from app.qforms.forms import QuadraticForm, diagonalize
from app.qforms.invariants import (
    det_square_class,
    hasse_invariant,
    isometric_over_K,
    odd_places,
    real_signature,
    same_square_class,
)
from app.quadfield.field import QuadField, norm_trace, unit_square_classes
from app.quadfield.hilbert import real_places
from app.quadfield.primes import PrimeIdeal, dyadic_generators, prime_generator
from app.schemas.enums import IsometryVerdict, SimilarityVerdict

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class SimilarityResult:
    """certificate 의 값은 모두 EXPR 또는 정수 문자열입니다."""

    verdict: SimilarityVerdict
    scalar: TowerElement | None = None
    witness: str | None = None
    certificate: dict[str, str] = field(default_factory=dict)


def _text(value: TowerElement) -> str:
    return format_expr(value, compact=True)


def _check_pair(first: QuadraticForm, second: QuadraticForm) -> None:
    if first.field != second.field:
        raise FieldMismatchError(f"서로 다른 체 위의 형식입니다: {first.field.label} / {second.field.label}")
    if first.dimension != second.dimension:
        raise DimensionMismatchError(f"차원이 다릅니다: {first.dimension} != {second.dimension}")


def _find_prime(label: str, first: QuadraticForm, second: QuadraticForm) -> PrimeIdeal | None:
    coeffs = (*diagonalize(first).coeffs, *diagonalize(second).coeffs)
    for prime in odd_places(coeffs, first.field):
        if prime.label == label:
            return prime
    return None


def _unit_sweep(
    first: QuadraticForm, second: QuadraticForm, scalar: TowerElement, prime: PrimeIdeal
) -> dict[str, str]:
    """λ 를 λ·u 로 바꿔도 자리 prime 의 하세 불변량 차이가 남는지 단위 제곱류마다 기록합니다."""
    target = hasse_invariant(diagonalize(first), prime)
    sweep: dict[str, str] = {}
    for unit in unit_square_classes(first.field):
        scaled = hasse_invariant(diagonalize(second.scaled(scalar * unit)), prime)
        sweep[f"unit {_text(unit)}"] = f"{scaled} vs {target}"
    return sweep


def _similar_odd(first: QuadraticForm, second: QuadraticForm) -> SimilarityResult:
    field_ = first.field
    scalar = det_square_class(first.determinant() * second.determinant(), field_).representative
    result = isometric_over_K(first, second.scaled(scalar))
    logger.info("similar_over_K odd forced_lambda=%s verdict=%s", _text(scalar), result.verdict)
    if result.verdict is IsometryVerdict.ISOMETRIC:
        return SimilarityResult(SimilarityVerdict.SIMILAR, scalar, certificate={"lambda": _text(scalar)})
    if result.verdict is IsometryVerdict.INCONCLUSIVE:
        return SimilarityResult(SimilarityVerdict.INCONCLUSIVE, scalar, certificate={"lambda": _text(scalar)})
    certificate = {"reason": "hasse", "lambda": _text(scalar), "place": result.witness or ""}
    prime = _find_prime(result.witness or "", first, second.scaled(scalar))
    if prime is not None:
        generator = prime_generator(prime, get_settings().PRIME_GENERATOR_SEARCH_BOUND)
        if generator is not None:
            certificate["generator"] = _text(generator)
        certificate["hasse_first"] = str(hasse_invariant(diagonalize(first), prime))
        certificate["hasse_second"] = str(hasse_invariant(diagonalize(second.scaled(scalar)), prime))
        certificate.update(_unit_sweep(first, second, scalar, prime))
    elif result.detail:
        certificate["detail"] = result.detail
    return SimilarityResult(SimilarityVerdict.NOT_SIMILAR, witness=result.witness, certificate=certificate)


def _candidate_generators(first: QuadraticForm, second: QuadraticForm) -> list[TowerElement]:
    field_ = first.field
    bound = get_settings().PRIME_GENERATOR_SEARCH_BOUND
    generators = [field_.element(-1)]
    if not field_.is_rational_field:
        generators.append(field_.fundamental_unit)
    coeffs = (*diagonalize(first).coeffs, *diagonalize(second).coeffs)
    for prime in odd_places(coeffs, field_):
        generator = prime_generator(prime, bound)
        if generator is not None:
            generators.append(generator)
    generators.extend(dyadic_generators(field_, bound))
    return generators


def _signature_obstruction(first: QuadraticForm, second: QuadraticForm) -> str | None:
    left, right = diagonalize(first), diagonalize(second)
    for place in real_places(first.field):
        pos, neg = real_signature(right, place)
        if real_signature(left, place) not in ((pos, neg), (neg, pos)):
            return place.label
    return None


def _similar_even(first: QuadraticForm, second: QuadraticForm) -> SimilarityResult:
    field_ = first.field
    ratio = first.determinant() / second.determinant()
    if not same_square_class(ratio, field_.element(1), field_):
        norm, _ = norm_trace(ratio, field_)
        certificate = {"reason": "det-ratio", "ratio": _text(ratio), "norm": str(norm)}
        return SimilarityResult(SimilarityVerdict.NOT_SIMILAR, witness="det", certificate=certificate)
    generators = _candidate_generators(first, second)
    limit = get_settings().SIMILARITY_MAX_CANDIDATES
    subsets = itertools.chain.from_iterable(
        itertools.combinations(generators, count) for count in range(len(generators) + 1)
    )
    tried = 0
    undecided = False
    for chosen in itertools.islice(subsets, limit):
        tried += 1
        scalar = _product(chosen, field_)
        result = isometric_over_K(first, second.scaled(scalar))
        if result.verdict is IsometryVerdict.ISOMETRIC:
            logger.info("similar_over_K even tried=%d lambda=%s", tried, _text(scalar))
            return SimilarityResult(SimilarityVerdict.SIMILAR, scalar, certificate={"lambda": _text(scalar)})
        undecided = undecided or result.verdict is IsometryVerdict.INCONCLUSIVE
    logger.info("similar_over_K even exhausted tried=%d undecided=%s", tried, undecided)
    place = _signature_obstruction(first, second)
    if place is not None:
        return SimilarityResult(
            SimilarityVerdict.NOT_SIMILAR, witness=place, certificate={"reason": "signature", "place": place}
        )
    return SimilarityResult(SimilarityVerdict.INCONCLUSIVE, certificate={"candidates": str(tried)})


def _product(values: tuple[TowerElement, ...], field_: QuadField) -> TowerElement:
    result = field_.element(1)
    for value in values:
        result = result * value
    return result


def similar_over_K(first: QuadraticForm, second: QuadraticForm) -> SimilarityResult:  # noqa: N802
    """홀수 차원은 λ 가 판별식으로 강제되므로 한 번의 등거리 판정으로 끝납니다.

    짝수 차원은 판별식 제곱류가 같아야 하며, 그 뒤로는 유한한 후보 λ 만 시도하므로
    판정하지 못하면 inconclusive 를 돌려줍니다.
    """
    _check_pair(first, second)
    if first.dimension % 2:
        return _similar_odd(first, second)
    return _similar_even(first, second)
