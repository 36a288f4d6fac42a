"""콕세터 다이어그램 파서, 그람 행렬, signature, 절단/이중화 테스트."""

import math
from pathlib import Path

import numpy as np
import pytest

from app.core.errors import (
    DiagramSyntaxError,
    DoublingError,
    NotASimplexError,
    TruncationError,
    UnsupportedLabelError,
)
from app.coxeter.construct import (
    double_polyhedron,
    double_template,
    truncate_simplex,
    truncated_gram,
    truncation_template,
)
from app.coxeter.diagram import Dotted, Heavy, Label, chain_diagram, parse_diagram, serialize_diagram
from app.coxeter.gram import cos_pi_over, gram_matrix, gram_matrix_float
from app.coxeter.signature import (
    Signature,
    classify_subdiagram,
    hyperideal_facets,
    signature,
    vertex_kind,
    vertex_links,
)
from app.exact.embedding import to_float
from app.exact.expr import parse_expr
from app.exact.tower import Tower
from app.schemas.enums import SubdiagramType, VertexKind
from app.services.dataset import load_diagram

A1 = math.sqrt(math.sqrt(5) / (2 * math.sqrt(5) - 3))
C1 = math.sqrt(math.sqrt(5) / (math.sqrt(5) - 1))
B1 = math.sqrt(3 + math.sqrt(5)) / math.sqrt(13 - 5 * math.sqrt(5))


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("S1_4", Signature(4, 1, 0)),
        ("S2_4", Signature(4, 1, 0)),
        ("S1_5", Signature(5, 1, 0)),
        ("S2_5", Signature(5, 1, 0)),
        ("P1_4", Signature(4, 1, 2)),
        ("P2_4", Signature(4, 1, 2)),
        ("P1_5", Signature(5, 1, 1)),
        ("P", Signature(5, 1, 1)),
    ],
)
def test_bundled_gram_signatures_are_exact(data_dir: Path, name: str, expected: Signature) -> None:
    diagram = load_diagram(data_dir / f"{name}.cox")

    assert signature(gram_matrix(diagram)) == expected


@pytest.mark.parametrize("name", ["S1_4", "S2_4", "S1_5", "S2_5", "P1_4", "P2_4", "P1_5", "P"])
def test_bundled_diagrams_round_trip_byte_identically(data_dir: Path, name: str) -> None:
    text = (data_dir / f"{name}.cox").read_text(encoding="utf-8")

    assert serialize_diagram(parse_diagram(text)) == text


def test_float_gram_matches_exact_gram(data_dir: Path) -> None:
    diagram = load_diagram(data_dir / "P1_4.cox")

    exact = np.array([[to_float(entry) for entry in row] for row in gram_matrix(diagram)])

    assert np.allclose(exact, gram_matrix_float(diagram), atol=1e-12)


def test_parse_reports_line_and_column() -> None:
    with pytest.raises(DiagramSyntaxError) as exc_info:
        parse_diagram("vertices 3\nedge 1 4 m=3\n")

    assert exc_info.value.line == 2
    assert exc_info.value.column == 8


@pytest.mark.parametrize(
    "text",
    [
        "vertices 3\nedge 1 2 m=2\n",
        "vertices 3\nedge 1 1 m=3\n",
        "vertices 3\nedge 1 2 m=3\nedge 2 1 m=4\n",
        "vertices 3\nedge 1 2 dotted w=1/2\n",
        "vertices 3\nedge 1 2 dotted w=1+\n",
        "edge 1 2 m=3\n",
        "diagram X\n",
        "vertices 2\nface 1 2\n",
    ],
)
def test_parse_rejects_malformed_diagrams(text: str) -> None:
    with pytest.raises(DiagramSyntaxError):
        parse_diagram(text)


def test_parse_accepts_comments_heavy_edges_and_unknown_weights() -> None:
    diagram = parse_diagram("# header\ndiagram D\nvertices 3\nedge 1 2 m=inf  # parallel\nedge 2 3 dotted w=?\n")

    assert diagram.name == "D"
    assert diagram.edge(0, 1) == Heavy()
    assert diagram.edge(1, 2) == Dotted()
    assert diagram.unknown_edges() == [(1, 2)]


def test_cos_pi_over_uses_half_angle_for_even_multiples() -> None:
    tower, value = cos_pi_over(8, Tower())

    assert to_float(value) == pytest.approx(math.cos(math.pi / 8), abs=1e-12)
    assert tower.degree >= 2


def test_unsupported_label_is_rejected() -> None:
    diagram = parse_diagram("vertices 2\nedge 1 2 m=7\n")

    with pytest.raises(UnsupportedLabelError):
        gram_matrix(diagram)


@pytest.mark.parametrize(
    ("labels", "expected"),
    [
        ([5, 3, 3], SubdiagramType.ELLIPTIC),
        ([3, 4, 3], SubdiagramType.ELLIPTIC),
        ([float("inf")], SubdiagramType.PARABOLIC),
        ([4, 4], SubdiagramType.PARABOLIC),
        ([3, 5, 3], SubdiagramType.HYPERBOLIC_COMPACT),
        ([4, 3, 5], SubdiagramType.HYPERBOLIC_COMPACT),
        ([6, 3, 3], SubdiagramType.HYPERBOLIC_NONCOMPACT),
    ],
)
def test_classify_subdiagram_on_chains(labels: list[float], expected: SubdiagramType) -> None:
    assert classify_subdiagram(gram_matrix(chain_diagram(labels))) == expected


def test_vertex_links_of_four_dimensional_simplex(data_dir: Path) -> None:
    links = vertex_links(load_diagram(data_dir / "S1_4.cox"))

    assert [link.kind for link in links] == [
        VertexKind.HYPERIDEAL,
        VertexKind.ORDINARY,
        VertexKind.ORDINARY,
        VertexKind.ORDINARY,
        VertexKind.HYPERIDEAL,
    ]
    assert links[0].link_type is SubdiagramType.HYPERBOLIC_COMPACT


def test_vertex_links_of_five_dimensional_simplex(data_dir: Path) -> None:
    assert hyperideal_facets(load_diagram(data_dir / "S1_5.cox")) == [5]


@pytest.mark.parametrize(
    ("edges", "expected"),
    [
        ("edge 1 2 m=3\nedge 2 3 m=3", VertexKind.ORDINARY),
        ("edge 1 2 m=3\nedge 2 3 m=3\nedge 1 3 m=3", VertexKind.IDEAL),
        ("edge 1 2 m=4\nedge 2 3 m=4\nedge 1 3 m=6", VertexKind.HYPERIDEAL),
    ],
)
def test_vertex_kind_follows_link_type(edges: str, expected: VertexKind) -> None:
    assert vertex_kind(gram_matrix(parse_diagram(f"vertices 3\n{edges}\n"))) is expected


def test_noncompact_hyperbolic_link_is_not_hyperideal() -> None:
    link = gram_matrix(parse_diagram("vertices 3\nedge 1 2 m=inf\nedge 2 3 m=3\nedge 1 3 m=3\n"))

    assert classify_subdiagram(link) is SubdiagramType.HYPERBOLIC_NONCOMPACT
    with pytest.raises(NotASimplexError):
        vertex_kind(link)


def test_truncation_template_appends_unknown_nodes(data_dir: Path) -> None:
    template = truncation_template(load_diagram(data_dir / "S1_4.cox"))

    assert template.n == 7
    assert template.unknown_edges() == [(0, 6), (4, 5), (5, 6)]


def test_truncate_simplex_reproduces_bundled_weights(data_dir: Path) -> None:
    truncated = truncate_simplex(load_diagram(data_dir / "S1_4.cox"))

    weights = {(i, j): to_float(kind.weight) for i, j, kind in truncated.iter_edges() if isinstance(kind, Dotted)}

    assert weights[(0, 6)] == pytest.approx(A1, abs=1e-12)
    assert weights[(4, 5)] == pytest.approx(C1, abs=1e-12)
    assert weights[(5, 6)] == pytest.approx(B1, abs=1e-12)
    assert (A1, B1, C1) == pytest.approx((1.2324, 1.6963, 1.3450), abs=1e-4)
    assert signature(gram_matrix(truncated)) == Signature(4, 1, 2)


def test_truncated_gram_rejects_ordinary_vertex(data_dir: Path) -> None:
    matrix = gram_matrix(load_diagram(data_dir / "S1_4.cox"))

    with pytest.raises(TruncationError):
        truncated_gram(matrix, [2])


def test_double_polyhedron_along_even_facet(data_dir: Path) -> None:
    doubled = double_polyhedron(load_diagram(data_dir / "P.cox"), 5)
    golden, _ = parse_expr("(1+sqrt(5))/2")

    assert doubled.n == 8
    assert doubled.edge(5, 7) == Dotted(golden)
    assert doubled.edge(4, 6) is None
    assert doubled.edge(0, 1) == Label(5)
    assert signature(gram_matrix(doubled)) == Signature(5, 1, 2)


def test_double_template_marks_crossing_pairs_unknown(data_dir: Path) -> None:
    template = double_template(load_diagram(data_dir / "P1_5.cox"), 6)

    assert template.n == 7
    assert template.unknown_edges() == [(5, 6)]
    assert template.edge(0, 1) == Label(5)


def test_double_template_requires_facet_without_finite_angles(data_dir: Path) -> None:
    with pytest.raises(DoublingError):
        double_template(load_diagram(data_dir / "P.cox"), 5)


def test_double_along_odd_label_is_rejected(data_dir: Path) -> None:
    with pytest.raises(DoublingError):
        double_polyhedron(load_diagram(data_dir / "S1_5.cox"), 0)
