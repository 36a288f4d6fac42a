"""이차형식 파일, 대각화, 불변량, 등거리/닮음 판정 테스트."""

from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.errors import DegenerateFormError, DimensionMismatchError, FieldMismatchError, FormSyntaxError
from app.exact.linalg import matmul, transpose
from app.qforms.forms import QuadraticForm, diagonalize, format_form, parse_form
from app.qforms.invariants import (
    det_square_class,
    form_invariants,
    hasse_invariant,
    isometric_over_K,
    same_square_class,
)
from app.qforms.similarity import similar_over_K
from app.quadfield.field import quad_field
from app.quadfield.hilbert import real_places
from app.quadfield.primes import factor_rational_prime
from app.schemas.enums import IsometryVerdict, SimilarityVerdict
from app.services.dataset import load_form

K = quad_field(5)
PRIMES = [prime for p in (3, 5, 11, 19) for prime, _ in factor_rational_prime(p, K)]
PLACES = [*real_places(K), *PRIMES]
DATA = Path(__file__).resolve().parent.parent / "data"


def _form(data_dir: Path, name: str) -> QuadraticForm:
    return load_form(data_dir / f"{name}.form")


@pytest.mark.parametrize("name", ["Q1_4", "Q2_4", "Q1_5", "Q2_5"])
def test_bundled_forms_round_trip(data_dir: Path, name: str) -> None:
    text = (data_dir / f"{name}.form").read_text(encoding="utf-8")

    form = parse_form(text)

    assert form.field.d == 5
    assert format_form(form) == text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "field sqrt 12\n1\n",
        "field cubic\n1\n",
        "field sqrt 5\n1 0\n0\n",
        "field sqrt 5\n1 2\n3 1\n",
        "field sqrt 5\n1 sqrt(2)\nsqrt(2) 1\n",
        "field sqrt 5\n1 1+\n1+ 1\n",
    ],
)
def test_parse_form_rejects_malformed_files(text: str) -> None:
    with pytest.raises(FormSyntaxError):
        parse_form(text)


def test_diagonalize_rejects_degenerate_form() -> None:
    form = parse_form("field sqrt 5\n1 1\n1 1\n")

    with pytest.raises(DegenerateFormError):
        diagonalize(form)


@settings(max_examples=60)
@given(st.permutations(list(range(5))))
def test_hasse_invariant_does_not_depend_on_pivot_order(order: list[int]) -> None:
    form = load_form(DATA / "Q2_4.form")
    reference = diagonalize(form)
    permuted = diagonalize(form, order)

    for place in PLACES:
        assert hasse_invariant(permuted, place) == hasse_invariant(reference, place)


def _unipotent(entries: list[int], size: int):
    values = iter(entries)
    rows = []
    for i in range(size):
        rows.append(tuple(K.element(1 if i == j else next(values) if j > i else 0) for j in range(size)))
    return tuple(rows)


@settings(max_examples=40)
@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=10, max_size=10))
def test_form_invariants_are_congruence_invariant(entries: list[int]) -> None:
    form = load_form(DATA / "Q1_4.form")
    change = _unipotent(entries, 5)
    moved = QuadraticForm(K, matmul(matmul(change, form.matrix), transpose(change)))

    before = form_invariants(form, places=PRIMES)
    after = form_invariants(moved, places=PRIMES)

    assert after.det_class.key == before.det_class.key
    assert after.signatures == before.signatures
    assert after.hasse == before.hasse


def test_isometry_distinguishes_four_dimensional_forms(data_dir: Path) -> None:
    result = isometric_over_K(_form(data_dir, "Q1_4"), _form(data_dir, "Q2_4"))

    assert result.verdict is IsometryVerdict.NOT_ISOMETRIC
    assert result.witness == "p5"
    assert result.detail == "det"


def test_form_is_isometric_to_itself(data_dir: Path) -> None:
    form = _form(data_dir, "Q1_5")

    assert isometric_over_K(form, form).verdict is IsometryVerdict.ISOMETRIC


def test_isometry_reports_dimension_mismatch(data_dir: Path) -> None:
    result = isometric_over_K(_form(data_dir, "Q1_4"), _form(data_dir, "Q1_5"))

    assert result.verdict is IsometryVerdict.NOT_ISOMETRIC
    assert result.witness == "dimension"


def test_four_dimensional_forms_are_not_similar(data_dir: Path) -> None:
    result = similar_over_K(_form(data_dir, "Q1_4"), _form(data_dir, "Q2_4"))

    assert result.verdict is SimilarityVerdict.NOT_SIMILAR
    assert result.witness == "p5"
    assert result.certificate["reason"] == "hasse"
    assert result.certificate["place"] == "p5"
    assert result.certificate["hasse_first"] != result.certificate["hasse_second"]


def test_five_dimensional_forms_differ_by_det_ratio(data_dir: Path) -> None:
    result = similar_over_K(_form(data_dir, "Q1_5"), _form(data_dir, "Q2_5"))

    assert result.verdict is SimilarityVerdict.NOT_SIMILAR
    assert result.witness == "det"
    assert result.certificate["reason"] == "det-ratio"
    assert result.certificate["norm"] == "11/16"


def test_odd_dimensional_similarity_forces_lambda(data_dir: Path) -> None:
    form = _form(data_dir, "Q1_4")

    assert similar_over_K(form, form).certificate == {"lambda": "1"}
    scaled = similar_over_K(form, form.scaled(K.element(3)))
    assert scaled.verdict is SimilarityVerdict.SIMILAR
    assert scaled.scalar is not None
    assert same_square_class(scaled.scalar, K.element(3), K)


def test_even_dimensional_similarity_finds_unit_scalar(data_dir: Path) -> None:
    form = _form(data_dir, "Q1_5")

    result = similar_over_K(form, form.scaled(K.fundamental_unit))

    assert result.verdict is SimilarityVerdict.SIMILAR


def test_similarity_requires_matching_dimension_and_field(data_dir: Path) -> None:
    with pytest.raises(DimensionMismatchError):
        similar_over_K(_form(data_dir, "Q1_4"), _form(data_dir, "Q1_5"))
    rational = parse_form("field Q\n1 0\n0 -1\n")
    other = parse_form("field sqrt 5\n1 0\n0 -1\n")
    with pytest.raises(FieldMismatchError):
        similar_over_K(rational, other)


@pytest.mark.parametrize("text", ["-3", "44", "4-sqrt(5)", "2", "-1", "(1+sqrt(5))/2", "20"])
def test_det_square_class_representative_is_in_same_class(text: str) -> None:
    value = parse_form(f"field sqrt 5\n{text}\n").matrix[0][0]

    square_class = det_square_class(value, K)

    assert square_class.exact
    assert same_square_class(square_class.representative, value, K)


def test_square_determinant_has_trivial_representative() -> None:
    assert det_square_class(K.element(20), K).representative == 1
