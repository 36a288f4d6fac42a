"""신장 트리 재척도화로 얻는 주변 이차형식, 반사 행렬, 허용성(admissibility)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from app.core.errors import AmbientFormError, DegenerateFormError, VerificationError
from app.core.logger import get_logger
from app.coxeter.signature import Signature, signature
from app.exact.embedding import galois_conjugate
from app.exact.linalg import (
    Matrix,
    congruence_diagonalize,
    determinant,
    identity,
    matmul,
    matrix_tower,
    submatrix,
    transpose,
)
from app.exact.tower import TowerElement
from app.qforms.forms import QuadraticForm
from app.vinberg.cyclic import TraceField, entry_field, support_graph, trace_field

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class AmbientForm:
    """λ_i·λ_j·M_ij 로 재척도화된 형식. nodes 는 남긴 주 부분행렬의 정점(0부터)입니다."""

    matrix: Matrix
    field: TraceField
    scalings: tuple[TowerElement, ...]
    nodes: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.matrix)


def tree_scalings(matrix: Matrix) -> tuple[TowerElement, ...]:
    """정점 0 에서 시작하는 BFS 신장 트리를 따라 λ_child = λ_parent · 2·M(parent, child)."""
    tower = matrix_tower(matrix)
    graph = support_graph(matrix)
    scalings: dict[int, TowerElement] = {}
    for component in nx.connected_components(graph):
        root = min(component)
        scalings[root] = tower.one
        for parent, child in nx.bfs_edges(graph, root):
            scalings[child] = scalings[parent] * 2 * matrix[parent][child]
    return tuple(scalings[node] for node in range(len(matrix)))


def _full_rank_core(matrix: Matrix) -> tuple[int, ...]:
    rank = congruence_diagonalize(matrix).rank
    if rank == 0:
        raise DegenerateFormError("영 행렬입니다.")
    if rank == len(matrix):
        return tuple(range(len(matrix)))
    for nodes in itertools.combinations(range(len(matrix)), rank):
        if determinant(submatrix(matrix, nodes)):
            return nodes
    raise DegenerateFormError("계수와 같은 크기의 비퇴화 주 부분행렬이 없습니다.")


def ambient_form(matrix: Matrix) -> AmbientForm:
    """트리 재척도화 후 모든 성분이 trace field 에 속하는지 검증합니다. 퇴화 입력은 사전순 첫 최대 계수 주 부분행렬을 씁니다."""
    field = trace_field(matrix)
    scalings = tree_scalings(matrix)
    size = len(matrix)
    rescaled = tuple(tuple(scalings[i] * scalings[j] * matrix[i][j] for j in range(size)) for i in range(size))
    nodes = _full_rank_core(rescaled)
    core = submatrix(rescaled, nodes)
    for i, row in enumerate(core):
        for j, entry in enumerate(row):
            if not field.contains(entry):
                position = f"({nodes[i] + 1},{nodes[j] + 1})"
                raise AmbientFormError(f"재척도화된 성분 {position} = {entry} 이 {field.label} 밖에 있습니다.")
    expected = signature(submatrix(matrix, nodes))
    observed = signature(core)
    if expected != observed:
        raise VerificationError(f"재척도화 전후 signature 가 다릅니다: {expected} / {observed}")
    logger.info("ambient_form field=%s nodes=%s", field.label, [node + 1 for node in nodes])
    return AmbientForm(core, field, tuple(scalings[node] for node in nodes), nodes)


def ambient_quadratic_form(matrix: Matrix, name: str = "") -> QuadraticForm:
    """주변 형식을 이차 trace field 위의 QuadraticForm 으로 옮깁니다."""
    form = ambient_form(matrix)
    return QuadraticForm.from_matrix(form.matrix, form.field.as_quad_field(), name)


def reflection_matrices(matrix: Matrix) -> list[Matrix]:
    """γ_i = I − (2/M_ii)·E_ii·M, 즉 v ↦ v − 2(e_iᵀ M v / M_ii)·e_i."""
    if not determinant(matrix):
        raise DegenerateFormError("퇴화된 행렬에서는 반사를 정의하지 않습니다.")
    tower = matrix_tower(matrix)
    size = len(matrix)
    base = identity(size, tower)
    reflections = []
    for i in range(size):
        rows = [list(row) for row in base]
        factor = 2 / matrix[i][i]
        rows[i] = [base[i][j] - factor * matrix[i][j] for j in range(size)]
        reflections.append(tuple(tuple(row) for row in rows))
    return reflections


def verify_reflections(matrix: Matrix, reflections: list[Matrix]) -> None:
    """γ² = I 와 γᵀ M γ = M 을 정확히 확인합니다."""
    base = identity(len(matrix), matrix_tower(matrix))
    for index, gamma in enumerate(reflections):
        if matmul(gamma, gamma) != base:
            raise VerificationError(f"γ_{index + 1} 가 대합(involution)이 아닙니다.")
        if matmul(matmul(transpose(gamma), matrix), gamma) != matrix:
            raise VerificationError(f"γ_{index + 1} 가 형식을 보존하지 않습니다.")


def conjugate_matrix(matrix: Matrix, flips: list[int]) -> Matrix:
    return tuple(tuple(galois_conjugate(entry, flips) for entry in row) for row in matrix)


def admissible(form: AmbientForm | Matrix, dimension: int, field: TraceField | None = None) -> bool:
    """항등 매장에서 signature (d, 1) 이고 항등이 아닌 모든 켤레에서 양의 정부호인지 판정합니다."""
    if isinstance(form, AmbientForm):
        matrix, field = form.matrix, form.field
    else:
        matrix = form
    if field is None:
        field = entry_field(matrix)
    if signature(matrix) != Signature(dimension, 1, 0):
        return False
    pivots = field.pivot_primes()
    for count in range(1, len(pivots) + 1):
        for flips in itertools.combinations(pivots, count):
            conjugated = signature(conjugate_matrix(matrix, list(flips)))
            if conjugated != Signature(len(matrix), 0, 0):
                logger.info("admissible failed flips=%s signature=%s", flips, conjugated)
                return False
    return True
