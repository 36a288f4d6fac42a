"""제곱근 판정, 탑 확장, 탑 사이의 원소 이동."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from sympy import factorint

from app.core.errors import NegativeRadicandError, TowerMismatchError
from app.core.logger import get_logger
from app.exact.embedding import sign_of
from app.exact.tower import Terms, Tower, TowerElement, add_terms, inverse_terms, multiply_terms, split_terms

logger = get_logger(__name__)


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    numerator = isqrt(value.numerator)
    denominator = isqrt(value.denominator)
    if numerator * numerator == value.numerator and denominator * denominator == value.denominator:
        return Fraction(numerator, denominator)
    return None


def squarefree_part(value: int) -> int:
    """양의 정수의 제곱 인수를 제거한 값을 반환합니다."""
    result = 1
    for prime, exponent in factorint(value).items():
        if exponent % 2:
            result *= prime
    return result


def _halve(terms: Terms) -> Terms:
    return {mask: coeff / 2 for mask, coeff in terms.items()}


def _sqrt_level(tower: Tower, terms: Terms, level: int) -> Terms | None:
    """처음 level 개 생성원이 만드는 부분탑 안에서 정확한 제곱근을 찾습니다."""
    if level == 0:
        root = _rational_sqrt(terms.get(0, Fraction(0)))
        return None if root is None else ({0: root} if root else {})
    flag = 1 << (level - 1)
    square = dict(tower.generators[level - 1].square.terms)
    lower, upper = split_terms(terms, flag)
    if not upper:
        root = _sqrt_level(tower, lower, level - 1)
        if root is not None:
            return root
        root = _sqrt_level(tower, multiply_terms(tower, lower, inverse_terms(tower, square)), level - 1)
        return None if root is None else {mask | flag: coeff for mask, coeff in root.items()}
    norm = add_terms(
        multiply_terms(tower, lower, lower),
        multiply_terms(tower, square, multiply_terms(tower, upper, upper)),
        sign=-1,
    )
    reduced = _sqrt_level(tower, norm, level - 1)
    if reduced is None:
        return None
    for sign in (1, -1):
        half = _halve(add_terms(lower, reduced, sign=sign))
        head = _sqrt_level(tower, half, level - 1)
        if not head:
            continue
        tail = multiply_terms(tower, upper, inverse_terms(tower, {m: 2 * c for m, c in head.items()}))
        root = dict(head)
        for mask, coeff in tail.items():
            root[mask | flag] = coeff
        return root
    return None


def _closure_level(tower: Tower, terms: Terms, level: int) -> tuple[int, Terms] | None:
    """y² = x·m 을 만족하는 제곱 없는 양의 정수 m 과 부분탑 원소 y 를 찾습니다."""
    if level == 0:
        value = terms.get(0, Fraction(0))
        if value <= 0:
            return None
        product = value.numerator * value.denominator
        multiplier = squarefree_part(product)
        return multiplier, {0: Fraction(isqrt(product * multiplier), value.denominator)}
    flag = 1 << (level - 1)
    square = dict(tower.generators[level - 1].square.terms)
    lower, upper = split_terms(terms, flag)
    if not upper:
        found = _closure_level(tower, lower, level - 1)
        if found is not None:
            return found
        found = _closure_level(tower, multiply_terms(tower, lower, inverse_terms(tower, square)), level - 1)
        if found is None:
            return None
        multiplier, root = found
        return multiplier, {mask | flag: coeff for mask, coeff in root.items()}
    norm = add_terms(
        multiply_terms(tower, lower, lower),
        multiply_terms(tower, square, multiply_terms(tower, upper, upper)),
        sign=-1,
    )
    reduced = _sqrt_level(tower, norm, level - 1)
    if reduced is None:
        return None
    for sign in (1, -1):
        half = _halve(add_terms(lower, reduced, sign=sign))
        if not half:
            continue
        found = _closure_level(tower, half, level - 1)
        if found is None or not found[1]:
            continue
        multiplier, head = found
        numerator = {mask: coeff * multiplier for mask, coeff in upper.items()}
        tail = multiply_terms(tower, numerator, inverse_terms(tower, {m: 2 * c for m, c in head.items()}))
        root = dict(head)
        for mask, coeff in tail.items():
            root[mask | flag] = coeff
        return multiplier, root
    return None


def _positive(root: TowerElement) -> TowerElement:
    return -root if sign_of(root) < 0 else root


def sqrt_in_tower(x: TowerElement) -> TowerElement | None:
    """x 의 탑 안에서 양의 제곱근을 찾고, 없으면 None 을 반환합니다."""
    if x.is_zero():
        return x
    root = _sqrt_level(x.tower, x.term_map, x.tower.degree)
    if root is None:
        return None
    return _positive(TowerElement.from_terms(x.tower, root))


def adjoin_sqrt(tower: Tower, radicand: TowerElement) -> tuple[Tower, TowerElement]:
    """√radicand 를 표현하는 탑과 원소를 반환합니다.

    탑 안에 이미 제곱근이 있으면 탑을 그대로 돌려줍니다. 유리수 근호 몇 개를 더해 표현되면
    빠진 소수만 새 생성원으로 붙이고, 그래도 없을 때에만 형식적 생성원을 붙입니다.
    """
    radicand = coerce(radicand, tower)
    if radicand.is_zero():
        return tower, radicand
    if sign_of(radicand) <= 0:
        raise NegativeRadicandError(f"구별된 매장에서 양수가 아닌 값의 제곱근입니다: {radicand}")

    existing = sqrt_in_tower(radicand)
    if existing is not None:
        return tower, existing

    found = _closure_level(tower, radicand.term_map, tower.degree)
    if found is not None:
        multiplier, root_terms = found
        extended = tower
        radical = tower.one
        for prime in sorted(factorint(multiplier)):
            index = extended.prime_index.get(prime)
            if index is None:
                extended, generator = extended.extend(extended.rational(prime), prime=prime)
            else:
                generator = extended.generator_element(index)
            radical = radical * generator
        root = TowerElement.from_terms(tower, root_terms).lift(extended) / radical
        logger.debug("adjoin_sqrt resolved radicand=%s multiplier=%d", radicand, multiplier)
        return extended, _positive(root)

    extended, generator = tower.extend(radicand)
    logger.debug("adjoin_sqrt formal generator=%s degree=%d", extended.names[-1], extended.degree)
    return extended, generator


def _generator_images(source: Tower, target: Tower) -> list[TowerElement]:
    cache = target._cache.setdefault("images", {})
    cached = cache.get(source.names)
    if cached is not None:
        return cached
    images: list[TowerElement] = []
    for generator in source.generators:
        index = target.name_index.get(generator.name)
        if index is not None:
            images.append(target.generator_element(index))
            continue
        square = _evaluate_in(generator.square, target, images)
        image = sqrt_in_tower(square)
        if image is None:
            raise TowerMismatchError(f"생성원 {generator.name} 을 {target!r} 안에서 표현할 수 없습니다.")
        images.append(image)
    cache[source.names] = images
    return images


def _evaluate_in(x: TowerElement, target: Tower, images: list[TowerElement]) -> TowerElement:
    total = target.zero
    for mask, coeff in x.terms:
        term = target.rational(coeff)
        index = 0
        while mask:
            if mask & 1:
                term = term * images[index]
            mask >>= 1
            index += 1
        total = total + term
    return total


def coerce(x: TowerElement, target: Tower) -> TowerElement:
    """x 를 target 탑의 원소로 옮깁니다. 생성원은 이름으로, 없으면 정확한 제곱근으로 대응시킵니다."""
    if x.tower.is_prefix_of(target):
        return x.lift(target)
    return _evaluate_in(x, target, _generator_images(x.tower, target))


def unify_towers(left: Tower, right: Tower) -> Tower:
    """두 탑의 원소를 모두 담는 탑을 left 를 접두로 하여 만듭니다."""
    if right.is_prefix_of(left):
        return left
    if left.is_prefix_of(right):
        return right
    result = left
    images: list[TowerElement] = []
    for generator in right.generators:
        index = result.name_index.get(generator.name)
        if index is not None:
            images = [image.lift(result) for image in images]
            images.append(result.generator_element(index))
            continue
        images = [image.lift(result) for image in images]
        square = _evaluate_in(generator.square, result, images)
        result, image = adjoin_sqrt(result, square)
        images = [item.lift(result) for item in images]
        images.append(image)
    return result


def unify_elements(*elements: TowerElement) -> tuple[Tower, list[TowerElement]]:
    """여러 원소를 하나의 공통 탑으로 옮깁니다."""
    tower = Tower()
    for element in elements:
        tower = unify_towers(tower, element.tower)
    return tower, [coerce(element, tower) for element in elements]
