"""탑 원소 행렬의 정확한 선형대수."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from app.core.errors import TowerMismatchError
from app.core.logger import get_logger
from app.exact.tower import Tower, TowerElement, join_towers

logger = get_logger(__name__)

Matrix = tuple[tuple[TowerElement, ...], ...]


def common_tower(elements: Sequence[TowerElement]) -> Tower:
    tower = Tower()
    for element in elements:
        tower = join_towers(tower, element.tower)
    return tower


def as_matrix(rows: Sequence[Sequence[TowerElement]], tower: Tower | None = None) -> Matrix:
    """모든 성분을 하나의 탑으로 올린 불변 행렬을 만듭니다."""
    flat = [entry for row in rows for entry in row]
    target = common_tower(flat) if tower is None else join_towers(tower, common_tower(flat))
    size = len(rows[0]) if rows else 0
    if any(len(row) != size for row in rows):
        raise TowerMismatchError("행 길이가 일정하지 않습니다.")
    return tuple(tuple(entry.lift(target) for entry in row) for row in rows)


def matrix_tower(matrix: Matrix) -> Tower:
    return matrix[0][0].tower if matrix else Tower()


def identity(size: int, tower: Tower) -> Matrix:
    return tuple(tuple(tower.one if i == j else tower.zero for j in range(size)) for i in range(size))


def transpose(matrix: Matrix) -> Matrix:
    return tuple(zip(*matrix, strict=True)) if matrix else ()


def matmul(left: Matrix, right: Matrix) -> Matrix:
    columns = transpose(right)
    tower = join_towers(matrix_tower(left), matrix_tower(right))
    rows = []
    for row in left:
        out = []
        for column in columns:
            total = tower.zero
            for a, b in zip(row, column, strict=True):
                if a and b:
                    total = total + a * b
            out.append(total)
        rows.append(tuple(out))
    return tuple(rows)


def scale(matrix: Matrix, factor: TowerElement | int) -> Matrix:
    return as_matrix([[entry * factor for entry in row] for row in matrix])


def submatrix(matrix: Matrix, rows: Sequence[int], columns: Sequence[int] | None = None) -> Matrix:
    columns = rows if columns is None else columns
    return tuple(tuple(matrix[i][j] for j in columns) for i in rows)


def is_symmetric(matrix: Matrix) -> bool:
    return all(matrix[i][j] == matrix[j][i] for i in range(len(matrix)) for j in range(i + 1, len(matrix)))


def determinant(matrix: Matrix) -> TowerElement:
    """열 부분집합 동적계획법으로 나눗셈 없이 행렬식을 계산합니다."""
    size = len(matrix)
    tower = matrix_tower(matrix)
    if size == 0:
        return tower.one
    layer: dict[int, TowerElement] = {0: tower.one}
    for row_index in range(size):
        row = matrix[row_index]
        following: dict[int, TowerElement] = {}
        for used, partial in layer.items():
            for column in range(size):
                flag = 1 << column
                if used & flag or not row[column]:
                    continue
                inversions = (used >> (column + 1)).bit_count()
                product = partial * row[column]
                key = used | flag
                contribution = -product if inversions % 2 else product
                following[key] = following[key] + contribution if key in following else contribution
        layer = {mask: value for mask, value in following.items() if value}
        if not layer:
            return tower.zero
    return layer.get((1 << size) - 1, tower.zero)


def principal_minor(matrix: Matrix, indices: Sequence[int]) -> TowerElement:
    return determinant(submatrix(matrix, sorted(indices)))


def cofactor(matrix: Matrix, row: int, column: int) -> TowerElement:
    """(−1)^(row+column) · (row 행과 column 열을 지운 소행렬식)."""
    keep_rows = [i for i in range(len(matrix)) if i != row]
    keep_columns = [j for j in range(len(matrix)) if j != column]
    minor = determinant(submatrix(matrix, keep_rows, keep_columns))
    return -minor if (row + column) % 2 else minor


@dataclass(frozen=True, slots=True)
class Diagonalization:
    """transform · M · transformᵀ = diag(diagonal) 인 합동 대각화 결과."""

    diagonal: tuple[TowerElement, ...]
    transform: Matrix

    @property
    def rank(self) -> int:
        return sum(1 for entry in self.diagonal if entry)


def congruence_diagonalize(matrix: Matrix, order: Sequence[int] | None = None) -> Diagonalization:
    """대칭 가우스 소거로 합동 대각화를 수행합니다.

    order 가 주어지면 그 순서로 피벗을 우선 탐색하며, 대각 성분이 모두 0 이면 e_i ↦ e_i + e_j 를 씁니다.
    """
    size = len(matrix)
    tower = matrix_tower(matrix)
    permutation = list(order) if order is not None else list(range(size))
    work = [[matrix[i][j] for j in permutation] for i in permutation]
    transform = [[tower.one if permutation[i] == j else tower.zero for j in range(size)] for i in range(size)]

    def swap(a: int, b: int) -> None:
        if a == b:
            return
        work[a], work[b] = work[b], work[a]
        for row in work:
            row[a], row[b] = row[b], row[a]
        transform[a], transform[b] = transform[b], transform[a]

    def add_multiple(target: int, source: int, factor: TowerElement) -> None:
        """행 target += factor·행 source, 열도 같은 연산."""
        for j in range(size):
            work[target][j] = work[target][j] + factor * work[source][j]
        for i in range(size):
            work[i][target] = work[i][target] + factor * work[i][source]
        for j in range(size):
            transform[target][j] = transform[target][j] + factor * transform[source][j]

    for k in range(size):
        pivot = next((r for r in range(k, size) if work[r][r]), None)
        if pivot is None:
            pair = next(((r, c) for r in range(k, size) for c in range(r + 1, size) if work[r][c]), None)
            if pair is None:
                break
            row, column = pair
            add_multiple(row, column, tower.one)
            pivot = row
            logger.debug("congruence_diagonalize pair trick k=%d pair=%s", k, pair)
        swap(k, pivot)
        head = work[k][k]
        for i in range(k + 1, size):
            if work[i][k]:
                add_multiple(i, k, -(work[i][k] / head))

    diagonal = tuple(work[i][i] for i in range(size))
    return Diagonalization(diagonal=diagonal, transform=tuple(tuple(row) for row in transform))
