"""콕세터 다이어그램 모델과 텍스트 형식 파서/직렬화기.

파일 형식 (한 파일에 다이어그램 하나, 정점 번호는 1부터)::

    diagram NAME
    vertices N
    edge I J m=M
    edge I J m=inf
    edge I J dotted w=EXPR
    edge I J dotted w=?

내부 표현의 정점 번호는 0부터 시작합니다.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

import networkx as nx

from app.core.errors import DiagramSyntaxError, ExpressionSyntaxError, UnknownWeightError
from app.core.logger import get_logger
from app.exact.embedding import sign_of
from app.exact.expr import format_expr, parse_expr
from app.exact.tower import Tower, TowerElement

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Label:
    """유한 꼭짓점 각 π/m (m ≥ 3)."""

    m: int

    @property
    def key(self) -> str:
        return f"m={self.m}"


@dataclass(frozen=True, slots=True)
class Heavy:
    """평행한 두 면 (m = ∞)."""

    @property
    def key(self) -> str:
        return "m=inf"


@dataclass(frozen=True, slots=True, eq=False)
class Dotted:
    """초평행한 두 면. weight 가 None 이면 아직 모르는 가중치입니다."""

    weight: TowerElement | None = None
    source: str | None = None

    @property
    def key(self) -> str:
        return "dotted"

    @property
    def is_known(self) -> bool:
        return self.weight is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dotted):
            return NotImplemented
        if self.weight is None or other.weight is None:
            return self.weight is None and other.weight is None
        return self.weight == other.weight

    def __hash__(self) -> int:
        return hash(("dotted", self.weight))


EdgeKind = Label | Heavy | Dotted


def _edge_key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class CoxeterDiagram:
    """n 개의 정점과 (i, j) → EdgeKind 사상. 간선이 없으면 두 면은 직교(m = 2)합니다."""

    n: int
    edges: Mapping[tuple[int, int], EdgeKind] = field(default_factory=dict)
    name: str = ""
    tower: Tower = field(default_factory=Tower)

    def edge(self, i: int, j: int) -> EdgeKind | None:
        return self.edges.get(_edge_key(i, j))

    def iter_edges(self) -> Iterator[tuple[int, int, EdgeKind]]:
        for (i, j), kind in sorted(self.edges.items()):
            yield i, j, kind

    def neighbors(self, node: int) -> list[int]:
        return sorted(j if i == node else i for i, j in self.edges if node in (i, j))

    def orthogonal_to(self, node: int) -> list[int]:
        """node 와 간선이 없는(직교하는) 정점들."""
        adjacent = set(self.neighbors(node))
        return [other for other in range(self.n) if other != node and other not in adjacent]

    def unknown_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, kind in self.iter_edges() if isinstance(kind, Dotted) and not kind.is_known]

    def require_known_weights(self) -> None:
        unknown = self.unknown_edges()
        if unknown:
            labels = ", ".join(f"{i + 1}-{j + 1}" for i, j in unknown)
            raise UnknownWeightError(f"가중치가 정해지지 않은 점선 간선이 있습니다: {labels}")

    def with_weights(
        self, weights: Mapping[tuple[int, int], TowerElement], tower: Tower | None = None
    ) -> CoxeterDiagram:
        """미지 점선 가중치를 채운 새 다이어그램을 반환합니다."""
        edges = dict(self.edges)
        for (i, j), weight in weights.items():
            key = _edge_key(i, j)
            if not isinstance(edges.get(key), Dotted):
                raise UnknownWeightError(f"{i + 1}-{j + 1} 는 점선 간선이 아닙니다.")
            edges[key] = Dotted(weight)
        return CoxeterDiagram(self.n, edges, self.name, tower or self.tower)

    def subdiagram(self, nodes: Iterable[int]) -> CoxeterDiagram:
        """nodes 로 유도된 부분 다이어그램. 새 번호는 nodes 의 순서를 따릅니다."""
        order = list(nodes)
        position = {node: index for index, node in enumerate(order)}
        edges = {
            _edge_key(position[i], position[j]): kind
            for (i, j), kind in self.edges.items()
            if i in position and j in position
        }
        return CoxeterDiagram(len(order), edges, self.name, self.tower)

    def support_graph(self) -> nx.Graph:
        """간선 종류를 'kind' 속성으로 갖는 networkx 그래프."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for i, j, kind in self.iter_edges():
            graph.add_edge(i, j, kind=kind.key)
        return graph


def chain_diagram(labels: Iterable[int | float], name: str = "") -> CoxeterDiagram:
    """선형 사슬 다이어그램. label 이 2 이면 간선을 두지 않고, inf 이면 굵은 간선입니다."""
    labels = list(labels)
    edges: dict[tuple[int, int], EdgeKind] = {}
    for index, m in enumerate(labels):
        if m == float("inf"):
            edges[(index, index + 1)] = Heavy()
        elif m != 2:
            edges[(index, index + 1)] = Label(int(m))
    return CoxeterDiagram(len(labels) + 1, edges, name)


def _token_columns(line: str) -> list[int]:
    return [match.start() + 1 for match in re.finditer(r"\S+", line)]


def _parse_node(token: str, n: int, line_no: int, column: int) -> int:
    if not token.isdigit():
        raise DiagramSyntaxError(f"정점 번호가 아닙니다: {token!r}", line_no, column)
    node = int(token)
    if not 1 <= node <= n:
        raise DiagramSyntaxError(f"정점 번호가 범위를 벗어났습니다: {node}", line_no, column)
    return node - 1


def parse_diagram(text: str) -> CoxeterDiagram:
    """다이어그램 텍스트를 해석합니다. 점선 가중치는 하나의 근호 탑 안에서 자랍니다."""
    name = ""
    n: int | None = None
    tower = Tower()
    edges: dict[tuple[int, int], EdgeKind] = {}
    weight_lines: dict[tuple[int, int], int] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        tokens = line.split()
        columns = _token_columns(line)
        head = tokens[0]
        if head == "diagram":
            if len(tokens) != 2:
                raise DiagramSyntaxError("'diagram NAME' 형식이어야 합니다", line_no)
            name = tokens[1]
            continue
        if head == "vertices":
            if n is not None:
                raise DiagramSyntaxError("'vertices' 가 중복되었습니다", line_no)
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise DiagramSyntaxError("'vertices N' (N ≥ 1) 형식이어야 합니다", line_no, columns[0])
            n = int(tokens[1])
            continue
        if head != "edge":
            raise DiagramSyntaxError(f"알 수 없는 지시어입니다: {head!r}", line_no, columns[0])
        if n is None:
            raise DiagramSyntaxError("'vertices' 가 'edge' 보다 먼저 와야 합니다", line_no)
        if len(tokens) < 4:
            raise DiagramSyntaxError("'edge I J ...' 형식이어야 합니다", line_no)
        i = _parse_node(tokens[1], n, line_no, columns[1])
        j = _parse_node(tokens[2], n, line_no, columns[2])
        if i == j:
            raise DiagramSyntaxError("자기 자신으로 가는 간선은 허용되지 않습니다", line_no)
        key = _edge_key(i, j)
        if key in edges:
            raise DiagramSyntaxError(f"간선 {i + 1}-{j + 1} 가 중복되었습니다", line_no)

        kind_token = tokens[3]
        if kind_token.startswith("m="):
            if len(tokens) != 4:
                raise DiagramSyntaxError("라벨 뒤에 불필요한 토큰이 있습니다", line_no, columns[4])
            value = kind_token[2:]
            if value == "inf":
                edges[key] = Heavy()
                continue
            if not value.isdigit():
                raise DiagramSyntaxError(f"라벨이 정수가 아닙니다: {value!r}", line_no, columns[3])
            m = int(value)
            if m < 3:
                raise DiagramSyntaxError(f"라벨은 3 이상이어야 합니다: m={m}", line_no, columns[3])
            edges[key] = Label(m)
            continue
        if kind_token != "dotted":
            raise DiagramSyntaxError(f"알 수 없는 간선 종류입니다: {kind_token!r}", line_no, columns[3])
        marker = line.find("w=", line.find("dotted"))
        if marker < 0:
            raise DiagramSyntaxError("점선 간선에는 'w=' 가 필요합니다", line_no, columns[3])
        source = line[marker + 2 :].strip()
        if source == "?":
            edges[key] = Dotted()
            continue
        try:
            weight, tower = parse_expr(source, tower)
        except ExpressionSyntaxError as exc:
            column = marker + 3 + (len(line[marker + 2 :]) - len(line[marker + 2 :].lstrip())) + exc.position
            raise DiagramSyntaxError(f"가중치 식 오류: {exc}", line_no, column) from exc
        edges[key] = Dotted(weight, source)
        weight_lines[key] = line_no

    if n is None:
        raise DiagramSyntaxError("'vertices' 선언이 없습니다", max(1, len(text.splitlines())))

    for key, kind in list(edges.items()):
        if isinstance(kind, Dotted) and kind.weight is not None:
            weight = kind.weight.lift(tower)
            if sign_of(weight - 1) <= 0:
                raise DiagramSyntaxError(f"점선 가중치는 1 보다 커야 합니다: {kind.source}", weight_lines[key])
            edges[key] = Dotted(weight, kind.source)

    logger.debug("parse_diagram name=%s n=%d edges=%d tower_degree=%d", name, n, len(edges), tower.degree)
    return CoxeterDiagram(n, edges, name, tower)


def serialize_diagram(diagram: CoxeterDiagram) -> str:
    """정규 텍스트 형식. 원래 식이 있는 가중치는 그 식을 그대로 씁니다."""
    lines = []
    if diagram.name:
        lines.append(f"diagram {diagram.name}")
    lines.append(f"vertices {diagram.n}")
    for i, j, kind in diagram.iter_edges():
        match kind:
            case Label(m=m):
                body = f"m={m}"
            case Heavy():
                body = "m=inf"
            case Dotted(weight=None):
                body = "dotted w=?"
            case Dotted(weight=weight, source=source):
                body = f"dotted w={source or format_expr(weight, compact=True)}"
        lines.append(f"edge {i + 1} {j + 1} {body}")
    return "\n".join(lines) + "\n"
