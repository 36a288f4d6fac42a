"""절단/이중 다면체의 점선 가중치 검증(정확)과 수치 해법(가우스-뉴턴)."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from app.core.errors import NoConvergenceError, UnknownWeightError
from app.core.logger import get_logger
from app.core.precision_policy import PrecisionPolicy, get_precision_policy
from app.coxeter.diagram import CoxeterDiagram
from app.coxeter.gram import gram_matrix, gram_matrix_float
from app.coxeter.signature import Signature, signature
from app.exact.linalg import determinant, principal_minor

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class WeightCheck:
    name: str
    passed: bool
    observed: str


@dataclass(frozen=True, slots=True)
class WeightVerification:
    """각 조건(소행렬식 소멸, 행렬식 소멸, signature)의 정확한 판정 결과."""

    checks: tuple[WeightCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def default_minors(n: int, dimension: int) -> list[tuple[int, ...]]:
    """크기 d+2 인 모든 주 소행렬식 (n 이 d+2 보다 클 때만)."""
    order = dimension + 2
    if n <= order:
        return []
    return list(itertools.combinations(range(n), order))


def verify_truncation_weights(
    diagram: CoxeterDiagram,
    dimension: int,
    minors: Sequence[Sequence[int]] | None = None,
) -> WeightVerification:
    """지정된 주 소행렬식과 전체 행렬식이 0 이고 signature 가 (d, 1, n−d−1) 인지 정확히 확인합니다."""
    diagram.require_known_weights()
    matrix = gram_matrix(diagram)
    checks: list[WeightCheck] = []
    for indices in minors if minors is not None else default_minors(diagram.n, dimension):
        value = principal_minor(matrix, indices)
        label = ",".join(str(index + 1) for index in sorted(indices))
        checks.append(WeightCheck(f"minor[{label}]", value.is_zero(), str(value)))
    if diagram.n > dimension + 1:
        det = determinant(matrix)
        checks.append(WeightCheck("det", det.is_zero(), str(det)))
    observed = signature(matrix)
    expected = Signature(dimension, 1, diagram.n - dimension - 1)
    checks.append(WeightCheck("signature", observed == expected, str(observed)))
    result = WeightVerification(tuple(checks))
    logger.info("verify_truncation_weights name=%s passed=%s checks=%d", diagram.name, result.passed, len(checks))
    return result


@dataclass(frozen=True, slots=True)
class NumericWeights:
    """미지 간선 (i, j) → 수치 가중치와 최종 잔차."""

    weights: dict[tuple[int, int], float]
    residual: float


def _residuals(
    diagram: CoxeterDiagram,
    unknowns: list[tuple[int, int]],
    minors: list[tuple[int, ...]],
    values: np.ndarray,
) -> np.ndarray:
    matrix = gram_matrix_float(diagram, dict(zip(unknowns, values, strict=True)))
    return np.array([np.linalg.det(matrix[np.ix_(indices, indices)]) for indices in minors])


def _gauss_newton(
    diagram: CoxeterDiagram,
    unknowns: list[tuple[int, int]],
    minors: list[tuple[int, ...]],
    start: np.ndarray,
    policy: PrecisionPolicy,
) -> tuple[np.ndarray, float] | None:
    values = start.astype(float)
    step_size = 1e-7
    for _ in range(policy.newton_max_iterations):
        residual = _residuals(diagram, unknowns, minors, values)
        norm = float(np.linalg.norm(residual))
        if norm < policy.newton_tolerance:
            return values, norm
        jacobian = np.empty((len(minors), len(unknowns)))
        for column in range(len(unknowns)):
            shifted = values.copy()
            shifted[column] += step_size
            jacobian[:, column] = (_residuals(diagram, unknowns, minors, shifted) - residual) / step_size
        delta, *_ = np.linalg.lstsq(jacobian, -residual, rcond=None)
        values = values + delta
        if not np.all(np.isfinite(values)):
            return None
    residual = _residuals(diagram, unknowns, minors, values)
    norm = float(np.linalg.norm(residual))
    return (values, norm) if norm < policy.newton_tolerance else None


def solve_truncation_weights_numeric(
    template: CoxeterDiagram,
    dimension: int,
    minors: Sequence[Sequence[int]] | None = None,
    *,
    policy: PrecisionPolicy | None = None,
) -> list[NumericWeights]:
    """미지 점선 가중치를 소행렬식 소멸 조건에서 수치적으로 구합니다. 모든 가중치가 1 보다 큰 해만 남깁니다."""
    unknowns = template.unknown_edges()
    if not unknowns:
        raise UnknownWeightError("미지 가중치가 없는 다이어그램입니다.")
    resolved = policy or get_precision_policy()
    equations = [tuple(indices) for indices in minors] if minors is not None else default_minors(template.n, dimension)
    if template.n > dimension + 1:
        equations.append(tuple(range(template.n)))
    equations = [
        indices for indices in equations if any(i in indices and j in indices for i, j in unknowns)
    ]
    if len(equations) < len(unknowns):
        raise NoConvergenceError(f"방정식 {len(equations)} 개로 미지수 {len(unknowns)} 개를 정할 수 없습니다.")

    solutions: dict[tuple[float, ...], NumericWeights] = {}
    for start in itertools.product(resolved.newton_grid, repeat=len(unknowns)):
        found = _gauss_newton(template, unknowns, equations, np.array(start), resolved)
        if found is None:
            continue
        values, norm = found
        if np.any(values <= 1.0):
            continue
        key = tuple(round(float(value), 7) for value in values)
        solutions.setdefault(key, NumericWeights(dict(zip(unknowns, map(float, values), strict=True)), norm))
    if not solutions:
        raise NoConvergenceError(f"{template.name}: 1 보다 큰 가중치 해를 찾지 못했습니다.")
    logger.info("solve_truncation_weights_numeric name=%s solutions=%d", template.name, len(solutions))
    return [solutions[key] for key in sorted(solutions)]
