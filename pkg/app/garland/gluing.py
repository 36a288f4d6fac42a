"""경계면 가정 검사와 조각을 이어 붙인 조합적 가랜드 다이어그램."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from networkx.algorithms.isomorphism import GraphMatcher

from app.core.errors import GluingError
from app.core.logger import get_logger
from app.coxeter.diagram import CoxeterDiagram, Dotted, EdgeKind, Label
from app.garland.catalog import Catalog
from app.garland.words import GarlandWord
from app.schemas.enums import AssumptionVerdict

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class AssumptionResult:
    verdict: AssumptionVerdict
    reason: str | None = None


def _same_kind(left: dict, right: dict) -> bool:
    return left["kind"] == right["kind"]


def link_isomorphism(
    first: CoxeterDiagram, first_facet: int, second: CoxeterDiagram, second_facet: int
) -> dict[int, int] | None:
    """두 면에 직교하는 면들이 이루는 부분 다이어그램의 간선 종류 보존 동형. second 노드 → first 노드."""
    first_link = first.orthogonal_to(first_facet)
    second_link = second.orthogonal_to(second_facet)
    if len(first_link) != len(second_link):
        return None
    matcher = GraphMatcher(
        second.subdiagram(second_link).support_graph(),
        first.subdiagram(first_link).support_graph(),
        edge_match=_same_kind,
    )
    if not matcher.is_isomorphic():
        return None
    return {second_link[local]: first_link[image] for local, image in matcher.mapping.items()}


def check_assumption(diagram: CoxeterDiagram, facets: Sequence[int]) -> AssumptionResult:
    """표시된 면(0부터)이 이웃 면 모두와 직교하거나 만나지 않는지, 두 면의 링크가 같은지 검사합니다."""
    if not 1 <= len(facets) <= 2:
        raise GluingError(f"표시할 면은 하나 또는 둘이어야 합니다: {list(facets)}")
    for facet in facets:
        if not 0 <= facet < diagram.n:
            raise GluingError(f"면 {facet + 1} 이 1..{diagram.n} 범위를 벗어났습니다.")
        for neighbor in diagram.neighbors(facet):
            kind = diagram.edge(facet, neighbor)
            if isinstance(kind, Label):
                reason = f"면 {facet + 1} 과 면 {neighbor + 1} 이 각 π/{kind.m} 로 만납니다."
                return AssumptionResult(AssumptionVerdict.FAILS, reason)
    if len(facets) == 1:
        return AssumptionResult(AssumptionVerdict.ONE_SIDED)
    first, second = facets
    if first == second:
        raise GluingError(f"같은 면을 두 번 표시했습니다: {first + 1}")
    if link_isomorphism(diagram, first, diagram, second) is None:
        reason = f"면 {first + 1} 과 면 {second + 1} 의 링크 부분 다이어그램이 동형이 아닙니다."
        return AssumptionResult(AssumptionVerdict.FAILS, reason)
    return AssumptionResult(AssumptionVerdict.TWO_SIDED)


def _check_word(catalog: Catalog, word: GarlandWord) -> None:
    for position, letter in enumerate(word.letters):
        piece = catalog.piece(letter)
        result = check_assumption(piece.diagram, piece.boundary)
        if result.verdict is AssumptionVerdict.FAILS:
            raise GluingError(f"조각 {letter} 이 경계면 가정을 만족하지 않습니다: {result.reason}")
        if piece.one_sided and 0 < position < len(word) - 1:
            raise GluingError(f"한쪽 경계만 있는 조각 {letter} 은 단어의 양 끝에만 올 수 있습니다.")


def _ports(piece_boundary: tuple[int, ...], position: int, length: int) -> tuple[int | None, int | None]:
    """(들어오는 면, 나가는 면). 막음 조각은 이웃 쪽으로 유일한 경계를 씁니다."""
    if len(piece_boundary) == 2:
        return piece_boundary
    only = piece_boundary[0]
    if position == 0:
        return None, only
    if position == length - 1:
        return only, None
    raise GluingError("한쪽 경계만 있는 조각이 가운데에 있습니다.")


def garland_diagram(catalog: Catalog, word: GarlandWord) -> CoxeterDiagram:
    """인접 조각의 ∂⁺ 와 ∂⁻ 를 붙인 조합적 다이어그램.

    붙인 면은 사라지고 그 면에 직교하던 면들은 링크 동형을 따라 하나로 합쳐집니다.
    다른 조각에 속한 면 쌍은 미지 점선 간선이 되며, 조각 안의 점선 가중치도 미지로 둡니다.
    """
    _check_word(catalog, word)
    name = f"{catalog.name}_garland_{word}"
    if len(word) == 1:
        piece = catalog.piece(word.letters[0])
        return CoxeterDiagram(piece.diagram.n, dict(piece.diagram.edges), name, piece.diagram.tower)
    edges: dict[tuple[int, int], EdgeKind] = {}
    removed: set[int] = set()
    total = 0
    previous_map: dict[int, int] = {}
    previous_piece = None
    previous_exit: int | None = None
    for position, letter in enumerate(word.letters):
        piece = catalog.piece(letter)
        entry, exit_ = _ports(piece.boundary, position, len(word))
        matching: dict[int, int] = {}
        if previous_piece is not None:
            found = link_isomorphism(previous_piece.diagram, previous_exit, piece.diagram, entry)
            if found is None:
                raise GluingError(f"{position}번째 이음새의 링크가 동형이 아닙니다.")
            matching = found
            removed.add(previous_map[previous_exit])
        mapping: dict[int, int] = {}
        fresh: list[int] = []
        for node in range(piece.diagram.n):
            if node == entry and previous_piece is not None:
                continue
            if node in matching:
                mapping[node] = previous_map[matching[node]]
            else:
                mapping[node] = total
                fresh.append(total)
                total += 1
        own = set(mapping.values())
        for i, j, kind in piece.diagram.iter_edges():
            if i in mapping and j in mapping:
                key = tuple(sorted((mapping[i], mapping[j])))
                edges[key] = Dotted() if isinstance(kind, Dotted) else kind
        for new in fresh:
            for old in range(total):
                if old in own or old in removed:
                    continue
                edges[(old, new) if old < new else (new, old)] = Dotted()
        previous_map, previous_piece, previous_exit = mapping, piece, exit_
    keep = [node for node in range(total) if node not in removed]
    index = {node: position for position, node in enumerate(keep)}
    compact = {(index[i], index[j]): kind for (i, j), kind in edges.items() if i in index and j in index}
    logger.info("garland_diagram catalog=%s word=%s nodes=%d", catalog.name, word, len(keep))
    return CoxeterDiagram(len(keep), compact, name)
