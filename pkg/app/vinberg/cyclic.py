"""그람 행렬의 순환곱과 그로부터 생성되는 체(trace field)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import prod

import networkx as nx
from sympy import primefactors

from app.core.errors import TraceFieldError
from app.core.logger import get_logger
from app.exact.linalg import Matrix, scale
from app.exact.tower import TowerElement, bit_indices
from app.quadfield.field import QuadField, quad_field

logger = get_logger(__name__)


def support_graph(matrix: Matrix) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(matrix)))
    for i in range(len(matrix)):
        for j in range(i + 1, len(matrix)):
            if matrix[i][j]:
                graph.add_edge(i, j)
    return graph


def _cycle_product(matrix: Matrix, cycle: list[int]) -> TowerElement:
    closed = [*cycle, cycle[0]]
    return reduce(lambda acc, pair: acc * matrix[pair[0]][pair[1]], zip(closed, closed[1:]), matrix[0][0].tower.one)


@dataclass(frozen=True, slots=True)
class CyclicProductSet:
    """2·G 의 쌍곱 (2G_ij)² 과 기본 순환 기저의 순환곱."""

    pair_products: dict[tuple[int, int], TowerElement]
    cycle_products: tuple[tuple[tuple[int, ...], TowerElement], ...]

    def values(self) -> list[TowerElement]:
        return list(self.pair_products.values()) + [value for _, value in self.cycle_products]

    def labelled(self) -> list[tuple[str, TowerElement]]:
        named = [(f"pair({i + 1},{j + 1})", value) for (i, j), value in self.pair_products.items()]
        for cycle, value in self.cycle_products:
            named.append((f"cycle({','.join(str(node + 1) for node in cycle)})", value))
        return named


def cyclic_products(matrix: Matrix) -> CyclicProductSet:
    """지지 그래프가 연결되어 있어야 하며, 순환곱은 2·G 에서 취합니다."""
    graph = support_graph(matrix)
    if len(matrix) > 1 and not nx.is_connected(graph):
        raise TraceFieldError("지지 그래프가 연결되어 있지 않습니다(기약 다이어그램이 아님).")
    doubled = scale(matrix, 2)
    pairs = {(i, j): doubled[i][j] * doubled[j][i] for i, j in sorted(tuple(sorted(edge)) for edge in graph.edges)}
    cycles = tuple((tuple(cycle), _cycle_product(doubled, cycle)) for cycle in nx.cycle_basis(graph, root=0))
    logger.debug("cyclic_products pairs=%d cycles=%d", len(pairs), len(cycles))
    return CyclicProductSet(pairs, cycles)


def all_cyclic_products(matrix: Matrix) -> list[TowerElement]:
    """모든 방향 단순 순환의 곱 (2-순환 포함). 무차별 대조용입니다."""
    doubled = scale(matrix, 2)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(matrix)))
    for i in range(len(matrix)):
        for j in range(len(matrix)):
            if i != j and matrix[i][j]:
                graph.add_edge(i, j)
    return [_cycle_product(doubled, cycle) for cycle in nx.simple_cycles(graph)]


def _monomial_radicands(element: TowerElement) -> set[int]:
    radicands = set()
    for mask, _ in element.terms:
        if mask:
            radicands.add(prod(element.tower.generators[index].prime or 1 for index in bit_indices(mask)))
    return radicands


def _prime_vector(value: int, primes: list[int]) -> int:
    return sum(1 << index for index, prime in enumerate(primes) if value % prime == 0)


def _reduced_basis(vectors: list[int]) -> list[int]:
    """F₂ 위 기약 행사다리꼴 기저. 각 행의 피벗(최하위 비트)은 그 행에만 나타납니다."""
    basis: list[int] = []
    for vector in vectors:
        for row in basis:
            if vector & row & -row:
                vector ^= row
        if not vector:
            continue
        pivot = vector & -vector
        basis = [row ^ vector if row & pivot else row for row in basis]
        basis.append(vector)
    return sorted(basis, key=lambda row: (row & -row).bit_length())


@dataclass(frozen=True)
class TraceField:
    """다중 이차체 Q(√r₁, …, √r_k). radicands 는 F₂ 위 기약 행사다리꼴 기저입니다."""

    radicands: tuple[int, ...]

    @cached_property
    def primes(self) -> list[int]:
        return sorted({prime for radicand in self.radicands for prime in primefactors(radicand)})

    @cached_property
    def _span(self) -> set[int]:
        span = {0}
        for radicand in self.radicands:
            vector = _prime_vector(radicand, self.primes)
            span |= {element ^ vector for element in span}
        return span

    @property
    def degree(self) -> int:
        return 1 << len(self.radicands)

    @property
    def is_rational(self) -> bool:
        return not self.radicands

    @property
    def is_quadratic(self) -> bool:
        return len(self.radicands) <= 1

    @property
    def label(self) -> str:
        if not self.radicands:
            return "Q"
        return "Q(" + ", ".join(f"sqrt {radicand}" for radicand in self.radicands) + ")"

    def as_quad_field(self) -> QuadField:
        if not self.is_quadratic:
            raise TraceFieldError(f"이차체가 아닙니다: {self.label}")
        return quad_field(self.radicands[0] if self.radicands else 1)

    def pivot_primes(self) -> list[int]:
        """기저 근호마다 그 근호에만 나타나는 소수. 이것을 뒤집으면 해당 근호만 부호가 바뀝니다."""
        pivots = []
        for radicand in self.radicands:
            vector = _prime_vector(radicand, self.primes)
            pivots.append(self.primes[(vector & -vector).bit_length() - 1])
        return pivots

    def contains(self, element: TowerElement) -> bool:
        if element.has_formal_support():
            return False
        for radicand in _monomial_radicands(element):
            if any(prime not in self.primes for prime in primefactors(radicand)):
                return False
            if _prime_vector(radicand, self.primes) not in self._span:
                return False
        return True


def trace_field(matrix: Matrix) -> TraceField:
    """순환곱들의 정규형에 나타나는 근호들이 생성하는 체를 구합니다."""
    products = cyclic_products(matrix)
    radicands: set[int] = set()
    for label, value in products.labelled():
        if value.has_formal_support():
            raise TraceFieldError(f"순환곱 {label} 이 유리 근호 부분체 밖의 원소입니다: {value}")
        radicands |= _monomial_radicands(value)
    field = _field_from_radicands(radicands)
    logger.info("trace_field field=%s products=%d", field.label, len(products.values()))
    return field


def _field_from_radicands(radicands: set[int]) -> TraceField:
    primes = sorted({prime for radicand in radicands for prime in primefactors(radicand)})
    basis = _reduced_basis([_prime_vector(radicand, primes) for radicand in sorted(radicands)])
    return TraceField(tuple(prod(prime for index, prime in enumerate(primes) if row >> index & 1) for row in basis))


def entry_field(matrix: Matrix) -> TraceField:
    """행렬 성분들이 생성하는 다중 이차체."""
    radicands: set[int] = set()
    for row in matrix:
        for entry in row:
            if entry.has_formal_support():
                raise TraceFieldError(f"유리 근호 부분체 밖의 성분입니다: {entry}")
            radicands |= _monomial_radicands(entry)
    return _field_from_radicands(radicands)
