"""Q 에서만 쓰는 2진 힐베르트 기호. 곱 공식 교차 검증용입니다."""

from __future__ import annotations

from fractions import Fraction

from sympy import multiplicity


def _integral_representative(value: Fraction | int) -> int:
    """제곱류를 보존하며 정수로 옮깁니다: p/q ↦ p·q."""
    value = Fraction(value)
    if value == 0:
        raise ValueError("힐베르트 기호의 인자는 0 이 아니어야 합니다.")
    return value.numerator * value.denominator


def _split_two(value: int) -> tuple[int, int]:
    exponent = multiplicity(2, value)
    return exponent, value // 2**exponent


def _epsilon(unit: int) -> int:
    return ((unit - 1) // 2) % 2


def _omega(unit: int) -> int:
    return ((unit * unit - 1) // 8) % 2


def dyadic_hilbert_symbol_q(x: Fraction | int, y: Fraction | int) -> int:
    """(x, y)_2 = (−1)^{ε(u)ε(v) + α·ω(v) + β·ω(u)}, x = 2^α·u, y = 2^β·v."""
    alpha, u = _split_two(_integral_representative(x))
    beta, v = _split_two(_integral_representative(y))
    exponent = _epsilon(u) * _epsilon(v) + alpha * _omega(v) + beta * _omega(u)
    return -1 if exponent % 2 else 1


def dyadic_hasse_q(coeffs: list[Fraction | int]) -> int:
    value = 1
    for i, left in enumerate(coeffs):
        for right in coeffs[i + 1 :]:
            value *= dyadic_hilbert_symbol_q(left, right)
    return value
