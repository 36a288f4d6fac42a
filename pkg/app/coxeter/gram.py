"""다이어그램의 그람 행렬 (정확한 값과 부동소수점 값)."""

from __future__ import annotations

import math
from collections.abc import Mapping

import numpy as np

from app.core.errors import UnsupportedLabelError
from app.coxeter.diagram import CoxeterDiagram, Dotted, Heavy, Label
from app.exact.embedding import to_float
from app.exact.linalg import Matrix
from app.exact.radicals import adjoin_sqrt
from app.exact.tower import Tower, TowerElement

SUPPORTED_BASE_LABELS = (2, 3, 4, 5, 6)


def is_supported_label(m: int) -> bool:
    """cos(π/m) 가 이차 근호 탑에 들어가는 라벨만 허용합니다: 2..6 과 그 짝수 배(반각 공식)."""
    while m > 6 and m % 2 == 0:
        m //= 2
    return m in SUPPORTED_BASE_LABELS


def cos_pi_over(m: int, tower: Tower) -> tuple[Tower, TowerElement]:
    """cos(π/m) 를 tower 위에서 정확히 만들고, 필요하면 확장된 탑을 함께 반환합니다."""
    if not is_supported_label(m):
        raise UnsupportedLabelError(f"cos(π/{m}) 는 이차 근호 탑으로 표현되지 않습니다.")
    match m:
        case 2:
            return tower, tower.zero
        case 3:
            return tower, tower.rational(1) / 2
        case 4:
            tower, root = adjoin_sqrt(tower, tower.rational(2))
            return tower, root / 2
        case 5:
            tower, root = adjoin_sqrt(tower, tower.rational(5))
            return tower, (root + 1) / 4
        case 6:
            tower, root = adjoin_sqrt(tower, tower.rational(3))
            return tower, root / 2
    tower, half = cos_pi_over(m // 2, tower)
    return adjoin_sqrt(tower, (half + 1) / 2)


def gram_matrix(diagram: CoxeterDiagram) -> Matrix:
    """(e_i, e_j): 대각 1, 라벨 −cos(π/m), 굵은 간선 −1, 점선 −w."""
    diagram.require_known_weights()
    tower = diagram.tower
    entries: dict[tuple[int, int], TowerElement] = {}
    for i, j, kind in diagram.iter_edges():
        match kind:
            case Label(m=m):
                tower, cosine = cos_pi_over(m, tower)
                entries[(i, j)] = -cosine
            case Heavy():
                entries[(i, j)] = -tower.one
            case Dotted(weight=weight):
                entries[(i, j)] = -weight
    rows = []
    for i in range(diagram.n):
        row = []
        for j in range(diagram.n):
            if i == j:
                row.append(tower.one)
                continue
            value = entries.get((i, j) if i < j else (j, i))
            row.append(tower.zero if value is None else value.lift(tower))
        rows.append(tuple(row))
    return tuple(rows)


def gram_matrix_float(
    diagram: CoxeterDiagram,
    assignment: Mapping[tuple[int, int], float] | None = None,
) -> np.ndarray:
    """부동소수점 그람 행렬. 미지 가중치는 assignment 로 채웁니다."""
    assignment = assignment or {}
    matrix = np.eye(diagram.n)
    for i, j, kind in diagram.iter_edges():
        match kind:
            case Label(m=m):
                value = -math.cos(math.pi / m)
            case Heavy():
                value = -1.0
            case Dotted(weight=None):
                value = -float(assignment[(i, j)])
            case Dotted(weight=weight):
                value = -to_float(weight)
        matrix[i, j] = matrix[j, i] = value
    return matrix
