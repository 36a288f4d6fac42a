"""인증된 관성(signature), 부분 다이어그램 분류, 단체 꼭짓점 링크."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx

from app.core.errors import NotASimplexError
from app.core.logger import get_logger
from app.coxeter.diagram import CoxeterDiagram
from app.coxeter.gram import gram_matrix
from app.exact.embedding import sign_of
from app.exact.linalg import Matrix, congruence_diagonalize, submatrix
from app.schemas.enums import SubdiagramType, VertexKind

logger = get_logger(__name__)


class Signature(NamedTuple):
    pos: int
    neg: int
    zero: int

    def __str__(self) -> str:
        return f"({self.pos},{self.neg},{self.zero})"


def signature(matrix: Matrix) -> Signature:
    """합동 대각화 후 각 대각 성분의 부호를 인증하여 (양, 음, 영) 개수를 셉니다."""
    diagonal = congruence_diagonalize(matrix).diagonal
    signs = [sign_of(entry) for entry in diagonal]
    result = Signature(signs.count(1), signs.count(-1), signs.count(0))
    logger.debug("signature size=%d result=%s", len(matrix), result)
    return result


def _components(matrix: Matrix) -> list[list[int]]:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(matrix)))
    for i in range(len(matrix)):
        for j in range(i + 1, len(matrix)):
            if matrix[i][j]:
                graph.add_edge(i, j)
    return [sorted(component) for component in nx.connected_components(graph)]


def _drop_one(matrix: Matrix, index: int) -> Matrix:
    keep = [k for k in range(len(matrix)) if k != index]
    return submatrix(matrix, keep)


def classify_subdiagram(matrix: Matrix) -> SubdiagramType:
    """주 부분행렬을 타원/포물/쌍곡(콤팩트, 비콤팩트)/기타로 분류합니다."""
    pos, neg, zero = signature(matrix)
    if neg == 0 and zero == 0:
        return SubdiagramType.ELLIPTIC
    if neg == 0:
        components = _components(matrix)
        if all(signature(submatrix(matrix, component)).zero > 0 for component in components):
            return SubdiagramType.PARABOLIC
        return SubdiagramType.INDEFINITE_OTHER
    if neg == 1 and zero == 0 and len(_components(matrix)) == 1:
        minors = [classify_subdiagram(_drop_one(matrix, k)) for k in range(len(matrix))]
        if all(kind is SubdiagramType.ELLIPTIC for kind in minors):
            return SubdiagramType.HYPERBOLIC_COMPACT
        if all(kind in (SubdiagramType.ELLIPTIC, SubdiagramType.PARABOLIC) for kind in minors):
            return SubdiagramType.HYPERBOLIC_NONCOMPACT
    return SubdiagramType.INDEFINITE_OTHER


@dataclass(frozen=True, slots=True)
class VertexLink:
    """면 facet 의 맞은편 꼭짓점과 그 링크(facet 을 뺀 나머지 정점)."""

    facet: int
    kind: VertexKind
    link_type: SubdiagramType
    link: tuple[int, ...]


def vertex_kind(link: Matrix, link_type: SubdiagramType | None = None) -> VertexKind:
    """링크가 타원이면 보통, 포물이면 이상, Lannér(콤팩트 쌍곡)이면 초이상 꼭짓점입니다."""
    link_type = link_type or classify_subdiagram(link)
    if link_type is SubdiagramType.ELLIPTIC:
        return VertexKind.ORDINARY
    if link_type is SubdiagramType.PARABOLIC:
        return VertexKind.IDEAL
    if link_type is SubdiagramType.HYPERBOLIC_COMPACT:
        return VertexKind.HYPERIDEAL
    raise NotASimplexError(f"지원하지 않는 꼭짓점입니다: 링크 유형 {link_type}, signature {signature(link)}")


def vertex_links(diagram: CoxeterDiagram) -> list[VertexLink]:
    """단체 다이어그램의 각 꼭짓점(면 i 의 맞은편)을 보통/이상/초이상으로 분류합니다."""
    matrix = gram_matrix(diagram)
    shape = signature(matrix)
    if shape != Signature(diagram.n - 1, 1, 0):
        raise NotASimplexError(f"단체의 그람 행렬이 아닙니다: signature={shape}")
    links: list[VertexLink] = []
    for facet in range(diagram.n):
        nodes = tuple(k for k in range(diagram.n) if k != facet)
        link = submatrix(matrix, nodes)
        link_type = classify_subdiagram(link)
        links.append(VertexLink(facet, vertex_kind(link, link_type), link_type, nodes))
    logger.debug(
        "vertex_links name=%s kinds=%s",
        diagram.name,
        ",".join(link.kind.value for link in links),
    )
    return links


def hyperideal_facets(diagram: CoxeterDiagram) -> list[int]:
    return [link.facet for link in vertex_links(diagram) if link.kind is VertexKind.HYPERIDEAL]
