"""이차형식 파일 형식과 대각화.

파일 형식::

    field sqrt 5
    2 -1 0
    -1 1 -1/4-1/4*sqrt(5)
    ...

첫 줄은 ``field sqrt D`` 또는 ``field Q`` 이며, 이어지는 각 줄이 대칭 행렬의 한 행입니다.
"""

from __future__ import annotations

from dataclasses import dataclass

from app.core.errors import (
    DegenerateFormError,
    ExpressionSyntaxError,
    FieldMismatchError,
    FormSyntaxError,
    TowerMismatchError,
    VerificationError,
)
from app.core.logger import get_logger
from app.exact.expr import format_expr, parse_expr
from app.exact.linalg import Matrix, congruence_diagonalize, determinant, is_symmetric, matmul, transpose
from app.exact.tower import TowerElement
from app.quadfield.field import QuadField, quad_field

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class QuadraticForm:
    """K = Q(√d) 위의 대칭 행렬로 주어진 이차형식."""

    field: QuadField
    matrix: Matrix
    name: str = ""

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @classmethod
    def from_matrix(cls, matrix: Matrix, field: QuadField, name: str = "") -> QuadraticForm:
        """다른 탑의 행렬 성분을 K 의 고유 탑으로 옮겨 만듭니다."""
        rows = tuple(tuple(field.lift_from(entry) for entry in row) for row in matrix)
        return cls(field, rows, name)

    def scaled(self, factor: TowerElement) -> QuadraticForm:
        factor = self.field.lift_from(factor)
        rows = tuple(tuple(entry * factor for entry in row) for row in self.matrix)
        return QuadraticForm(self.field, rows, self.name)

    def determinant(self) -> TowerElement:
        return determinant(self.matrix)


@dataclass(frozen=True, slots=True)
class DiagonalForm:
    """transform · M · transformᵀ = diag(coeffs)."""

    field: QuadField
    coeffs: tuple[TowerElement, ...]
    transform: Matrix


def _parse_field(line: str, line_no: int) -> QuadField:
    tokens = line.split()
    if tokens == ["field", "Q"]:
        return quad_field(1)
    if len(tokens) == 3 and tokens[:2] == ["field", "sqrt"] and tokens[2].isdigit():
        try:
            return quad_field(int(tokens[2]))
        except ValueError as exc:
            raise FormSyntaxError(f"{line_no}행: {exc}") from exc
    raise FormSyntaxError(f"{line_no}행: 'field sqrt D' 또는 'field Q' 가 필요합니다.")


def parse_form(text: str, name: str = "") -> QuadraticForm:
    """형식 파일을 해석합니다. 성분은 공백으로 구분된 EXPR 이며 모두 K 에 속해야 합니다."""
    lines = [(line_no, raw.split("#", 1)[0].strip()) for line_no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(line_no, line) for line_no, line in lines if line]
    if not lines:
        raise FormSyntaxError("빈 형식 파일입니다.")
    field = _parse_field(lines[0][1], lines[0][0])
    rows: list[tuple[TowerElement, ...]] = []
    for line_no, line in lines[1:]:
        row = []
        for token in line.split():
            try:
                value, _ = parse_expr(token, field.tower)
                row.append(field.lift_from(value))
            except ExpressionSyntaxError as exc:
                raise FormSyntaxError(f"{line_no}행: 성분 {token!r} 해석 실패: {exc}") from exc
            except (FieldMismatchError, TowerMismatchError) as exc:
                raise FormSyntaxError(f"{line_no}행: 성분 {token!r} 이 {field.label} 에 속하지 않습니다.") from exc
        rows.append(tuple(row))
    size = len(rows)
    if size == 0 or any(len(row) != size for row in rows):
        raise FormSyntaxError("정사각 행렬이 아닙니다.")
    matrix = tuple(rows)
    if not is_symmetric(matrix):
        raise FormSyntaxError("대칭 행렬이 아닙니다.")
    return QuadraticForm(field, matrix, name)


def format_form(form: QuadraticForm) -> str:
    header = "field Q" if form.field.is_rational_field else f"field sqrt {form.field.d}"
    rows = [" ".join(format_expr(entry, compact=True) for entry in row) for row in form.matrix]
    return "\n".join([header, *rows]) + "\n"


def diagonalize(form: QuadraticForm, order: list[int] | None = None) -> DiagonalForm:
    """합동 대각화 후 transform 으로 합동 관계를 정확히 검증합니다. 퇴화 형식은 거부합니다."""
    result = congruence_diagonalize(form.matrix, order)
    if result.rank < form.dimension:
        raise DegenerateFormError(f"퇴화된 형식입니다: rank={result.rank} < {form.dimension}")
    product = matmul(matmul(result.transform, form.matrix), transpose(result.transform))
    for i, row in enumerate(product):
        for j, entry in enumerate(row):
            expected = result.diagonal[i] if i == j else 0
            if entry != expected:
                raise VerificationError(f"합동 대각화 검증 실패: ({i + 1},{j + 1})")
    coeffs = tuple(form.field.to_field(entry) for entry in result.diagonal)
    logger.debug("diagonalize name=%s coeffs=%s", form.name, [str(coeff) for coeff in coeffs])
    return DiagonalForm(form.field, coeffs, result.transform)
