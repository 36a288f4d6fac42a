"""가랜드 조각 카탈로그 로딩."""

from __future__ import annotations

import tomllib
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from pydantic import ValidationError

from app.core.errors import CatalogError, CoxeterArithError
from app.core.logger import get_logger
from app.coxeter.construct import double_polyhedron
from app.coxeter.diagram import CoxeterDiagram, parse_diagram
from app.coxeter.gram import gram_matrix
from app.qforms.forms import QuadraticForm, parse_form
from app.qforms.similarity import SimilarityResult, similar_over_K
from app.schemas.catalog import CatalogFile, PieceEntry
from app.schemas.enums import ArithmeticClass, SimilarityVerdict
from app.vinberg.ambient import ambient_quadratic_form
from app.vinberg.classify import classify

logger = get_logger(__name__)


@dataclass(frozen=True)
class Piece:
    """가랜드 조각. boundary 는 0부터 센 (∂⁻, ∂⁺) 또는 막음 조각의 (∂,)."""

    letter: int
    source: CoxeterDiagram
    diagram: CoxeterDiagram
    boundary: tuple[int, ...]
    volume: Fraction
    form: QuadraticForm | None = None

    @property
    def one_sided(self) -> bool:
        return len(self.boundary) == 1


@dataclass(frozen=True)
class Catalog:
    name: str
    dimension: int
    pieces: dict[int, Piece]

    def piece(self, letter: int) -> Piece:
        try:
            return self.pieces[letter]
        except KeyError as exc:
            raise CatalogError(f"카탈로그 {self.name} 에 조각 {letter} 이 없습니다.") from exc

    @property
    def volumes(self) -> tuple[Fraction, Fraction]:
        return self.piece(1).volume, self.piece(2).volume

    def piece_class(self, letter: int) -> ArithmeticClass:
        return self._classes[letter]

    @cached_property
    def _classes(self) -> dict[int, ArithmeticClass]:
        """이중화 전 다이어그램으로 판정합니다. 이중화는 같은 주변 군을 줍니다."""
        classes = {}
        for letter, piece in self.pieces.items():
            classes[letter] = classify(gram_matrix(piece.source), self.dimension).verdict
            logger.info("catalog piece class catalog=%s piece=%d class=%s", self.name, letter, classes[letter])
        return classes

    @property
    def has_forms(self) -> bool:
        return any(piece.form is not None for piece in self.pieces.values())

    @cached_property
    def form_checks(self) -> dict[int, SimilarityResult]:
        """형식 파일이 있는 조각마다 다이어그램에서 유도한 주변 형식과의 닮음 판정."""
        results = {}
        for letter, piece in sorted(self.pieces.items()):
            if piece.form is None:
                continue
            derived = ambient_quadratic_form(gram_matrix(piece.source), name=piece.source.name)
            results[letter] = similar_over_K(derived, piece.form)
            logger.info(
                "catalog form check catalog=%s piece=%d form=%s verdict=%s",
                self.name,
                letter,
                piece.form.name,
                results[letter].verdict,
            )
        return results

    def require_matching_forms(self) -> None:
        for letter, result in self.form_checks.items():
            if result.verdict is not SimilarityVerdict.SIMILAR:
                raise CatalogError(
                    f"카탈로그 {self.name} 조각 {letter}: 형식 {self.piece(letter).form.name} 이 "
                    f"다이어그램의 주변 형식과 닮음으로 확인되지 않습니다: {result.verdict}"
                )

    @cached_property
    def ambient_comparison(self) -> SimilarityResult:
        """두 조각의 주변 형식이 닮음이 아님을 확인합니다."""
        first, second = self.piece(1).form, self.piece(2).form
        if first is None or second is None:
            raise CatalogError(f"카탈로그 {self.name} 에 주변 형식 파일이 없습니다.")
        return similar_over_K(first, second)

    def require_distinct_ambient(self) -> None:
        result = self.ambient_comparison
        if result.verdict is not SimilarityVerdict.NOT_SIMILAR:
            raise CatalogError(f"카탈로그 {self.name} 의 두 주변 형식이 서로 다름을 확인하지 못했습니다: {result.verdict}")


def _load_piece(letter: int, entry: PieceEntry, base: Path) -> Piece:
    source = parse_diagram((base / entry.diagram).read_text(encoding="utf-8"))
    diagram = source
    if entry.double_along is not None:
        if entry.double_along > source.n:
            raise CatalogError(f"조각 {letter}: double_along={entry.double_along} 이 범위를 벗어났습니다.")
        diagram = double_polyhedron(source, entry.double_along - 1)
    if any(node > diagram.n for node in entry.boundary):
        raise CatalogError(f"조각 {letter}: 경계 노드 {entry.boundary} 가 1..{diagram.n} 범위를 벗어났습니다.")
    form = None
    if entry.form is not None:
        form = parse_form((base / entry.form).read_text(encoding="utf-8"), name=Path(entry.form).stem)
    boundary = tuple(node - 1 for node in entry.boundary)
    return Piece(letter, source, diagram, boundary, entry.volume_value, form)


def parse_catalog(text: str, base: Path) -> Catalog:
    """TOML 카탈로그를 해석하고 참조된 다이어그램과 형식을 base 기준으로 읽습니다."""
    try:
        raw = tomllib.loads(text)
        catalog_file = CatalogFile.model_validate(raw)
    except (tomllib.TOMLDecodeError, ValidationError) as exc:
        raise CatalogError(f"카탈로그를 해석할 수 없습니다: {exc}") from exc
    try:
        pieces = {int(key): _load_piece(int(key), entry, base) for key, entry in catalog_file.pieces.items()}
    except CatalogError:
        raise
    except CoxeterArithError as exc:
        raise CatalogError(f"카탈로그 {catalog_file.name} 의 조각을 읽을 수 없습니다: {exc}") from exc
    logger.info("parse_catalog name=%s dimension=%d", catalog_file.name, catalog_file.dimension)
    return Catalog(catalog_file.name, catalog_file.dimension, pieces)


def load_catalog(path: Path) -> Catalog:
    return parse_catalog(path.read_text(encoding="utf-8"), path.parent)
