"""단체의 절단(truncation)과 면을 따라 붙인 이중 다면체(double)."""

from __future__ import annotations

import math

from app.core.errors import DoublingError, TruncationError
from app.core.logger import get_logger
from app.coxeter.diagram import CoxeterDiagram, Dotted, EdgeKind, Heavy, Label
from app.coxeter.gram import cos_pi_over, gram_matrix
from app.coxeter.signature import hyperideal_facets
from app.exact.embedding import sign_of, to_float
from app.exact.linalg import Matrix, cofactor, determinant, matrix_tower
from app.exact.radicals import adjoin_sqrt
from app.exact.tower import Tower, TowerElement

logger = get_logger(__name__)

_RECOGNIZED_LABELS = (3, 4, 5, 6, 8, 10, 12)


def _truncation_weights(
    matrix: Matrix, facets: list[int]
) -> tuple[Tower, dict[int, TowerElement], dict[tuple[int, int], TowerElement]]:
    """절단 초평면 H_i 와 면 i 사이, 그리고 H_i 와 H_j 사이의 가중치를 계산합니다."""
    tower = matrix_tower(matrix)
    det = determinant(matrix)
    minors = {i: cofactor(matrix, i, i) for i in facets}
    if facets and sign_of(det) >= 0:
        raise TruncationError("그람 행렬식이 음수가 아니어서 절단할 수 없습니다.")
    to_facet: dict[int, TowerElement] = {}
    for i in facets:
        if sign_of(minors[i]) >= 0:
            raise TruncationError(f"면 {i + 1} 의 맞은편 꼭짓점은 초이상(hyperideal) 꼭짓점이 아닙니다.")
        tower, weight = adjoin_sqrt(tower, det / minors[i])
        if sign_of(weight - 1) <= 0:
            raise TruncationError(f"절단 가중치가 1 이하입니다: 면 {i + 1}")
        to_facet[i] = weight
    between: dict[tuple[int, int], TowerElement] = {}
    for position, i in enumerate(facets):
        for j in facets[position + 1 :]:
            tower, root = adjoin_sqrt(tower, minors[i] * minors[j])
            weight = cofactor(matrix, i, j) / root
            if sign_of(weight - 1) <= 0:
                raise TruncationError(f"꼭짓점 {i + 1}, {j + 1} 의 절단 초평면이 서로 만납니다.")
            between[(i, j)] = weight
    return tower, to_facet, between


def _ordered_hyperideal(diagram: CoxeterDiagram) -> list[int]:
    return sorted(hyperideal_facets(diagram), reverse=True)


def truncation_template(simplex: CoxeterDiagram) -> CoxeterDiagram:
    """초이상 꼭짓점마다 절단 노드를 붙이되 가중치는 미지(?)로 둔 템플릿."""
    facets = _ordered_hyperideal(simplex)
    edges: dict[tuple[int, int], EdgeKind] = dict(simplex.edges)
    for offset, facet in enumerate(facets):
        node = simplex.n + offset
        edges[(facet, node)] = Dotted()
        for other in range(offset + 1, len(facets)):
            edges[(node, simplex.n + other)] = Dotted()
    return CoxeterDiagram(simplex.n + len(facets), edges, f"{simplex.name}_template", simplex.tower)


def truncate_simplex(simplex: CoxeterDiagram) -> CoxeterDiagram:
    """초이상 꼭짓점을 모두 절단한 다면체의 다이어그램을 정확한 가중치로 만듭니다."""
    facets = _ordered_hyperideal(simplex)
    matrix = gram_matrix(simplex)
    tower, to_facet, between = _truncation_weights(matrix, facets)
    edges: dict[tuple[int, int], EdgeKind] = dict(simplex.edges)
    node_of = {facet: simplex.n + offset for offset, facet in enumerate(facets)}
    for facet in facets:
        edges[(facet, node_of[facet])] = Dotted(to_facet[facet].lift(tower))
    for (i, j), weight in between.items():
        a, b = sorted((node_of[i], node_of[j]))
        edges[(a, b)] = Dotted(weight.lift(tower))
    logger.info("truncate_simplex name=%s truncated=%s", simplex.name, [facet + 1 for facet in facets])
    return CoxeterDiagram(simplex.n + len(facets), edges, f"{simplex.name}_truncated", tower)


def truncated_gram(matrix: Matrix, facets: list[int]) -> Matrix:
    """그람 행렬 수준의 절단. 절단 노드는 facets 순서대로 뒤에 붙습니다."""
    tower, to_facet, between = _truncation_weights(matrix, facets)
    size = len(matrix)
    total = size + len(facets)
    node_of = {facet: size + offset for offset, facet in enumerate(facets)}
    rows = [[tower.zero] * total for _ in range(total)]
    for i in range(size):
        for j in range(size):
            rows[i][j] = matrix[i][j].lift(tower)
    for facet, node in node_of.items():
        rows[node][node] = tower.one
        rows[facet][node] = rows[node][facet] = -to_facet[facet].lift(tower)
    for (i, j), weight in between.items():
        a, b = node_of[i], node_of[j]
        rows[a][b] = rows[b][a] = -weight.lift(tower)
    return tuple(tuple(row) for row in rows)


def _double_layout(diagram: CoxeterDiagram, facet: int) -> tuple[list[int], list[int]]:
    merged = diagram.orthogonal_to(facet)
    return merged, diagram.neighbors(facet)


def double_template(diagram: CoxeterDiagram, facet: int) -> CoxeterDiagram:
    """모든 인접 면과 직교하는 facet 을 따라 붙인 이중 다면체의 조합적 템플릿.

    facet 과 직교하는 면은 한 번만, 나머지 면은 두 벌 나타나며 두 벌 사이의 간선은 미지 점선입니다.
    """
    for neighbor in diagram.neighbors(facet):
        if isinstance(diagram.edge(facet, neighbor), Label):
            raise DoublingError(f"면 {facet + 1} 이 면 {neighbor + 1} 과 유한 각으로 만납니다.")
    merged, duplicated = _double_layout(diagram, facet)
    order = merged + duplicated + duplicated
    copy_b = set(range(len(merged) + len(duplicated), len(order)))
    edges: dict[tuple[int, int], EdgeKind] = {}
    for p in range(len(order)):
        for q in range(p + 1, len(order)):
            x, y = order[p], order[q]
            crossing = (p in copy_b) != (q in copy_b) and x in duplicated and y in duplicated
            if crossing:
                edges[(p, q)] = Dotted()
                continue
            kind = diagram.edge(x, y) if x != y else None
            if kind is not None:
                edges[(p, q)] = kind
    return CoxeterDiagram(len(order), edges, f"{diagram.name}_double_template", diagram.tower)


def _classify_entry(value: TowerElement, tower: Tower) -> tuple[Tower, EdgeKind | None]:
    if value.is_zero():
        return tower, None
    if value == -1:
        return tower, Heavy()
    if sign_of(value + 1) < 0:
        return tower, Dotted(-value)
    approx = to_float(value)
    for m in _RECOGNIZED_LABELS:
        if abs(approx + math.cos(math.pi / m)) > 1e-9:
            continue
        grown, cosine = cos_pi_over(m, tower)
        if value == -cosine:
            return grown, Label(m)
    raise DoublingError(f"이중 다면체의 그람 성분을 간선으로 해석할 수 없습니다: {value}")


def double_polyhedron(diagram: CoxeterDiagram, facet: int, name: str | None = None) -> CoxeterDiagram:
    """facet 을 따라 정확히 붙인 이중 다면체. facet 의 유한 각 간선은 모두 짝수 라벨이어야 합니다.

    두 벌 사이 성분은 반사 공식 (e_x', e_y) = G_xy − 2·G_xf·G_fy 를 따릅니다.
    """
    for neighbor in diagram.neighbors(facet):
        kind = diagram.edge(facet, neighbor)
        if isinstance(kind, Label) and kind.m % 2:
            raise DoublingError(f"면 {facet + 1} 과 면 {neighbor + 1} 사이 라벨 m={kind.m} 이 홀수입니다.")
    matrix = gram_matrix(diagram)
    tower = matrix_tower(matrix)
    merged, duplicated = _double_layout(diagram, facet)
    order = merged + duplicated + duplicated
    copy_b = set(range(len(merged) + len(duplicated), len(order)))
    edges: dict[tuple[int, int], EdgeKind] = {}
    for p in range(len(order)):
        for q in range(p + 1, len(order)):
            x, y = order[p], order[q]
            value = matrix[x][y]
            if (p in copy_b) != (q in copy_b):
                value = value - 2 * matrix[x][facet] * matrix[facet][y]
            tower, kind = _classify_entry(value, tower)
            if kind is not None:
                edges[(p, q)] = kind
    lifted = {
        key: Dotted(kind.weight.lift(tower)) if isinstance(kind, Dotted) else kind for key, kind in edges.items()
    }
    label = name or f"{diagram.name}_double{facet + 1}"
    logger.info("double_polyhedron name=%s facet=%d nodes=%d", diagram.name, facet + 1, len(order))
    return CoxeterDiagram(len(order), lifted, label, tower)
