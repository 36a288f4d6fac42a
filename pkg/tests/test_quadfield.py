"""실 이차체, 소 아이디얼, 힐베르트 기호 테스트."""

from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from sympy import primefactors

from app.core.errors import DyadicPlaceError, FieldMismatchError
from app.exact.embedding import to_float
from app.exact.expr import parse_expr
from app.qforms.dyadic import dyadic_hilbert_symbol_q
from app.quadfield.field import QuadField, field_of, home_field, is_integral, is_square, norm_trace, quad_field
from app.quadfield.hilbert import RealPlace, hilbert_symbol, real_places, square_class_key
from app.quadfield.primes import (
    PrimeKind,
    factor_rational_prime,
    prime_generator,
    relevant_primes,
    residue_character,
    valuation,
)

K = quad_field(5)
Q = quad_field(1)


def _prime(p: int, root: int | None = None, field: QuadField = K):
    for prime, _ in factor_rational_prime(p, field):
        if root is None or prime.root == root:
            return prime
    raise AssertionError(f"prime above {p} not found")


PLACES = [
    RealPlace(5),
    RealPlace(5, conjugate=True),
    _prime(3),
    _prime(5),
    _prime(11, 4),
    _prime(11, 7),
    _prime(19, 9),
]

small = st.integers(min_value=-30, max_value=30)
field_elements = st.tuples(small, small).filter(lambda pair: pair != (0, 0)).map(lambda pair: K.element(*pair))
places = st.sampled_from(PLACES)


def _brute_force_unit(d: int) -> float:
    """x² − d·y² = ±1 (d ≡ 1 mod 4 이면 ±4 도) 의 가장 작은 양의 해."""
    best = None
    scales = (1, 2) if d % 4 == 1 else (1,)
    for y in range(1, 200):
        for scale in scales:
            for rhs in (1, -1):
                square = d * y * y + rhs * scale * scale
                x = isqrt(square) if square > 0 else 0
                if x > 0 and x * x == square:
                    value = (x + y * d**0.5) / scale
                    best = value if best is None else min(best, value)
    assert best is not None
    return best


@pytest.mark.parametrize("d", [2, 3, 5, 6, 7, 13, 21])
def test_fundamental_unit_matches_brute_force_pell_search(d: int) -> None:
    field = quad_field(d)
    unit = field.fundamental_unit
    norm, _ = norm_trace(unit, field)

    assert abs(norm) == 1
    assert is_integral(unit, field)
    assert to_float(unit) == pytest.approx(_brute_force_unit(d))


def test_golden_ratio_is_fundamental_unit_of_q_sqrt5() -> None:
    assert K.fundamental_unit == K.element(Fraction(1, 2), Fraction(1, 2))


def test_rational_field_accepts_all_operations() -> None:
    assert Q.label == "Q"
    assert Q.element(3) == 3
    assert [place.label for place in real_places(Q)] == ["real+"]
    assert factor_rational_prime(7, Q)[0][0].kind is PrimeKind.RATIONAL


def test_non_squarefree_field_is_rejected() -> None:
    with pytest.raises(ValueError):
        QuadField(12)


def test_components_reject_foreign_radicals() -> None:
    value, _ = parse_expr("sqrt(2)")

    with pytest.raises(FieldMismatchError):
        K.components(value)
    assert field_of(value).d == 2


@pytest.mark.parametrize(
    ("p", "kind", "count"),
    [
        (3, PrimeKind.INERT, 1),
        (5, PrimeKind.RAMIFIED, 1),
        (7, PrimeKind.INERT, 1),
        (11, PrimeKind.SPLIT, 2),
        (19, PrimeKind.SPLIT, 2),
    ],
)
def test_prime_splitting_in_q_sqrt5(p: int, kind: PrimeKind, count: int) -> None:
    factors = factor_rational_prime(p, K)

    assert len(factors) == count
    assert all(prime.kind is kind for prime, _ in factors)


def test_dyadic_prime_is_rejected() -> None:
    with pytest.raises(DyadicPlaceError):
        factor_rational_prime(2, K)


def test_valuations_at_split_and_ramified_primes() -> None:
    x = K.element(4, -1)

    assert valuation(x, _prime(11, 4)) == 1
    assert valuation(x, _prime(11, 7)) == 0
    assert valuation(K.sqrt_d, _prime(5)) == 1
    assert valuation(K.element(5), _prime(5)) == 2
    assert valuation(K.element(Fraction(1, 9)), _prime(3)) == -2
    assert [prime.label for prime in relevant_primes(x, K)] == ["p11,4"]


def test_norms_of_det_ratio_numerators() -> None:
    a = K.sqrt_d

    assert norm_trace(4 - a, K)[0] == 11
    assert norm_trace(8 - 2 * a, K)[0] == 44


def test_prime_generator_has_prime_norm() -> None:
    for prime in (_prime(11, 4), _prime(11, 7), _prime(19, 9), _prime(5)):
        generator = prime_generator(prime)
        assert generator is not None
        assert valuation(generator, prime) == 1
        assert abs(norm_trace(generator, K)[0]) == prime.p


def test_residue_character_at_inert_prime_uses_norm() -> None:
    # F_9 는 F_3 의 모든 원소의 제곱근을 담습니다
    assert residue_character(K.element(2), _prime(3)) == 1
    assert residue_character(K.sqrt_d, _prime(3)) == 1


def test_is_square_finds_root() -> None:
    holds, root = is_square(K.element(6, -2))

    assert holds
    assert root is not None and root * root == K.element(6, -2)
    assert is_square(K.element(5))[0]
    assert not is_square(K.element(2))[0]


def test_rational_elements_default_to_their_own_field() -> None:
    assert home_field(K.element(5)) == K
    assert home_field(K.element(3)) == K
    assert home_field(quad_field(1).element(5)) == quad_field(1)
    assert norm_trace(K.element(5)) == (Fraction(25), Fraction(10))
    assert is_square(K.element(5))[1] == K.sqrt_d


def test_square_class_key_separates_signs_and_odd_valuations() -> None:
    assert square_class_key(K.element(-1), K) == ((-1, -1), ())
    assert square_class_key(K.sqrt_d, K) == ((1, -1), ("p5",))
    assert square_class_key(K.element(4), K) == ((1, 1), ())


@given(field_elements, field_elements, places)
def test_hilbert_symbol_is_symmetric(x, y, place) -> None:
    assert hilbert_symbol(x, y, place) == hilbert_symbol(y, x, place)


@given(field_elements, field_elements, field_elements, places)
def test_hilbert_symbol_is_bimultiplicative(x, y, z, place) -> None:
    assert hilbert_symbol(x * y, z, place) == hilbert_symbol(x, z, place) * hilbert_symbol(y, z, place)


@given(field_elements, places)
def test_hilbert_symbol_of_x_and_minus_x_is_trivial(x, place) -> None:
    assert hilbert_symbol(x, -x, place) == 1


@given(field_elements, places)
def test_hilbert_symbol_of_x_and_one_minus_x_is_trivial(x, place) -> None:
    assume(x != 1)
    assert hilbert_symbol(x, 1 - x, place) == 1


nonzero = st.integers(min_value=-200, max_value=200).filter(bool)


@given(nonzero, nonzero)
def test_product_formula_over_rationals_with_dyadic_oracle(x: int, y: int) -> None:
    value = hilbert_symbol(Q.element(x), Q.element(y), RealPlace(1))
    for p in primefactors(2 * x * y):
        if p == 2:
            continue
        prime = _prime(p, field=Q)
        value *= hilbert_symbol(Q.element(x), Q.element(y), prime)
    value *= dyadic_hilbert_symbol_q(x, y)

    assert value == 1


@given(st.fractions(min_value=-50, max_value=50, max_denominator=20), nonzero)
def test_dyadic_oracle_depends_only_on_square_class(x: Fraction, y: int) -> None:
    assume(x != 0)
    assert dyadic_hilbert_symbol_q(x, y) == dyadic_hilbert_symbol_q(x * 9, y * 4)
