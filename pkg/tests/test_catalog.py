"""가랜드 카탈로그, 경계면 가정, 이어 붙인 다이어그램, 가랜드 분류 테스트."""

import shutil
from fractions import Fraction
from pathlib import Path

import pytest

from app.core.errors import CatalogError, GluingError
from app.garland.catalog import load_catalog, parse_catalog
from app.garland.classify import classify_garland
from app.garland.gluing import check_assumption, garland_diagram, link_isomorphism
from app.garland.words import GarlandWord, capped_word
from app.schemas.enums import ArithmeticClass, AssumptionVerdict, SimilarityVerdict
from app.services.dataset import load_diagram

PIECE = """
[pieces.1]
diagram = "P1_5.cox"
boundary = [7]

[pieces.2]
diagram = "P.cox"
double_along = 6
boundary = [6, 8]
"""


@pytest.fixture
def h4(data_dir: Path):
    return load_catalog(data_dir / "catalog_h4.toml")


@pytest.fixture
def h5(data_dir: Path):
    return load_catalog(data_dir / "catalog_h5.toml")


def test_bundled_catalogs_load(h4, h5) -> None:
    assert (h4.name, h4.dimension) == ("h4", 4)
    assert (h5.name, h5.dimension) == ("h5", 5)
    assert h4.volumes == (Fraction(1), Fraction(1))
    assert h4.piece(1).diagram.n == 8
    assert h5.piece(1).one_sided
    assert h5.piece(1).form is not None and h5.piece(1).form.name == "Q1_5"


@pytest.mark.parametrize(
    "text",
    [
        "name = 'x'\ndimension = 4\n[pieces",
        "name = 'x'\ndimension = 4\n" + PIECE.replace("[pieces.2]", "[pieces.3]"),
        "dimension = 5\n" + PIECE,
        "name = 'x'\ndimension = 5\n" + PIECE.replace("boundary = [7]", "boundary = [7, 7]"),
        "name = 'x'\ndimension = 5\n" + PIECE.replace("boundary = [7]", "boundary = [9]"),
        "name = 'x'\ndimension = 5\n" + PIECE.replace("double_along = 6", "double_along = 9"),
        "name = 'x'\ndimension = 5\n" + PIECE.replace('boundary = [7]', 'boundary = [7]\nvolume = "-1"'),
        "name = 'x'\ndimension = 5\n" + PIECE.replace("P.cox", "missing.cox"),
    ],
)
def test_parse_catalog_rejects_malformed_catalogs(data_dir: Path, text: str) -> None:
    with pytest.raises((CatalogError, OSError)):
        parse_catalog(text, data_dir)


def test_missing_piece_letter_is_reported(h4) -> None:
    with pytest.raises(CatalogError):
        h4.piece(3)


def test_catalog_references_resolve_relative_to_catalog_file(data_dir: Path, tmp_path: Path) -> None:
    for name in ("catalog_h5.toml", "P1_5.cox", "P.cox", "Q1_5.form", "Q2_5.form"):
        shutil.copy(data_dir / name, tmp_path / name)

    catalog = load_catalog(tmp_path / "catalog_h5.toml")

    assert catalog.piece(2).diagram.n == 8


@pytest.mark.parametrize(
    ("catalog", "letter", "expected"),
    [
        ("h4", 1, AssumptionVerdict.TWO_SIDED),
        ("h4", 2, AssumptionVerdict.TWO_SIDED),
        ("h5", 1, AssumptionVerdict.ONE_SIDED),
        ("h5", 2, AssumptionVerdict.TWO_SIDED),
    ],
)
def test_bundled_pieces_satisfy_boundary_assumption(
    request: pytest.FixtureRequest, catalog: str, letter: int, expected: AssumptionVerdict
) -> None:
    piece = request.getfixturevalue(catalog).piece(letter)

    assert check_assumption(piece.diagram, piece.boundary).verdict is expected


def test_boundary_meeting_at_finite_angle_fails(data_dir: Path) -> None:
    result = check_assumption(load_diagram(data_dir / "S1_4.cox"), [0])

    assert result.verdict is AssumptionVerdict.FAILS
    assert result.reason is not None


def test_check_assumption_validates_facets(data_dir: Path) -> None:
    diagram = load_diagram(data_dir / "P.cox")

    with pytest.raises(GluingError):
        check_assumption(diagram, [])
    with pytest.raises(GluingError):
        check_assumption(diagram, [99])


def test_boundary_links_are_isomorphic(h4) -> None:
    diagram = h4.piece(1).diagram
    first, second = h4.piece(1).boundary

    mapping = link_isomorphism(diagram, first, diagram, second)

    assert mapping is not None
    assert sorted(mapping) == diagram.orthogonal_to(second)
    assert sorted(mapping.values()) == diagram.orthogonal_to(first)


def test_garland_diagram_merges_glued_links(h4, h5) -> None:
    assert garland_diagram(h4, GarlandWord.parse("12")).n == 10
    assert garland_diagram(h5, capped_word(1)).n == 8
    assert garland_diagram(h4, GarlandWord.parse("1")).n == 8


def test_garland_diagram_grows_linearly(h4) -> None:
    two = garland_diagram(h4, GarlandWord.parse("12")).n
    three = garland_diagram(h4, GarlandWord.parse("121")).n

    assert three - two == two - h4.piece(1).diagram.n


def test_one_sided_piece_must_sit_at_an_end(h5) -> None:
    with pytest.raises(GluingError):
        garland_diagram(h5, GarlandWord.parse("212"))


@pytest.mark.parametrize(
    ("catalog", "word", "expected"),
    [
        ("h4", "121", ArithmeticClass.NOT_QUASI_ARITHMETIC),
        ("h4", "11", ArithmeticClass.PROPERLY_QUASI_ARITHMETIC),
        ("h4", "2", ArithmeticClass.PROPERLY_QUASI_ARITHMETIC),
        ("h5", "222", ArithmeticClass.ARITHMETIC),
        ("h5", "221", ArithmeticClass.NOT_QUASI_ARITHMETIC),
    ],
)
def test_classify_garland(request: pytest.FixtureRequest, catalog: str, word: str, expected: ArithmeticClass) -> None:
    assert classify_garland(request.getfixturevalue(catalog), GarlandWord.parse(word)) is expected


def test_mixed_word_requires_ambient_forms(data_dir: Path) -> None:
    catalog = parse_catalog("name = 'bare'\ndimension = 5\n" + PIECE, data_dir)

    with pytest.raises(CatalogError):
        classify_garland(catalog, GarlandWord.parse("21"))


def test_bundled_forms_match_their_diagrams(h4, h5) -> None:
    for catalog in (h4, h5):
        assert sorted(catalog.form_checks) == [1, 2]
        assert all(result.verdict is SimilarityVerdict.SIMILAR for result in catalog.form_checks.values())
        catalog.require_matching_forms()


@pytest.mark.parametrize("word", ["2", "22", "12"])
def test_form_file_contradicting_its_diagram_is_rejected(data_dir: Path, tmp_path: Path, word: str) -> None:
    for name in ("P1_4.cox", "P2_4.cox", "Q1_4.form"):
        shutil.copy(data_dir / name, tmp_path / name)
    text = (data_dir / "catalog_h4.toml").read_text(encoding="utf-8").replace("Q2_4.form", "Q1_4.form")
    (tmp_path / "catalog_h4.toml").write_text(text, encoding="utf-8")
    catalog = load_catalog(tmp_path / "catalog_h4.toml")

    assert catalog.form_checks[2].verdict is SimilarityVerdict.NOT_SIMILAR
    with pytest.raises(CatalogError):
        classify_garland(catalog, GarlandWord.parse(word))
