"""가랜드 조각 카탈로그(TOML) 스키마."""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator, model_validator


class PieceEntry(BaseModel):
    """카탈로그의 조각 하나. 노드 번호는 파일과 같이 1부터 셉니다."""

    diagram: str = Field(..., description="다이어그램 파일 (카탈로그 기준 상대 경로)")
    double_along: int | None = Field(default=None, ge=1, description="이 노드를 따라 이중화한 다면체를 조각으로 씀")
    boundary: list[int] = Field(..., min_length=1, max_length=2, description="경계면 노드 ∂⁻, ∂⁺ (막음 조각은 하나)")
    volume: str = Field(default="1", description="사용자 지정 양의 유리수 부피")
    form: str | None = Field(default=None, description="주변 이차형식 파일")

    @field_validator("volume")
    @classmethod
    def _check_volume(cls, value: str) -> str:
        try:
            parsed = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"부피를 유리수로 읽을 수 없습니다: {value!r}") from exc
        if parsed <= 0:
            raise ValueError(f"부피는 양수여야 합니다: {value!r}")
        return value

    @field_validator("boundary")
    @classmethod
    def _check_boundary(cls, value: list[int]) -> list[int]:
        if any(node < 1 for node in value):
            raise ValueError("경계 노드 번호는 1 이상이어야 합니다.")
        if len(set(value)) != len(value):
            raise ValueError("경계 노드가 중복되었습니다.")
        return value

    @property
    def volume_value(self) -> Fraction:
        return Fraction(self.volume)


class CatalogFile(BaseModel):
    """name, dimension 과 조각 1, 2 로 이루어진 카탈로그."""

    name: str = Field(..., description="카탈로그 이름 (h4, h5 ...)")
    dimension: int = Field(..., ge=2, description="쌍곡 공간 차원")
    pieces: dict[str, PieceEntry] = Field(..., description="'1', '2' 두 조각")

    @model_validator(mode="after")
    def _check_pieces(self) -> CatalogFile:
        if set(self.pieces) != {"1", "2"}:
            raise ValueError(f"조각 키는 정확히 '1', '2' 여야 합니다: {sorted(self.pieces)}")
        return self
