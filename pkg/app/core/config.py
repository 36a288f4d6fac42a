"""애플리케이션 전역 설정을 관리하는 모듈."""

from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


def _clamp_int(value: object, default: int, lower: int, upper: int) -> int:
    try:
        numeric = int(value) if value is not None else default
    except (TypeError, ValueError):
        numeric = default
    return min(upper, max(lower, numeric))


class Settings(BaseSettings):
    """환경 변수 기반 설정 모델."""

    PRECISION_BITS: int = 128
    MAX_PRECISION_BITS: int = 8192
    DATA_DIR: str = "data"
    GARLAND_MAX_LENGTH: int = 24
    GARLAND_CHUNK_SIZE: int = 1 << 18
    NEWTON_MAX_ITERATIONS: int = 60
    NEWTON_TOLERANCE: float = 1e-11
    NEWTON_GRID: str = "1.05,1.5,2.5,4.0"
    SIMILARITY_MAX_CANDIDATES: int = 4096
    PRIME_GENERATOR_SEARCH_BOUND: int = 60

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("PRECISION_BITS", mode="before")
    @classmethod
    def _clamp_precision_bits(cls, value: object) -> int:
        return _clamp_int(value, 128, 16, 1 << 16)

    @field_validator("MAX_PRECISION_BITS", mode="before")
    @classmethod
    def _clamp_max_precision_bits(cls, value: object) -> int:
        return _clamp_int(value, 8192, 64, 1 << 20)

    @field_validator("GARLAND_MAX_LENGTH", mode="before")
    @classmethod
    def _clamp_garland_max_length(cls, value: object) -> int:
        return _clamp_int(value, 24, 1, 30)

    @field_validator("GARLAND_CHUNK_SIZE", mode="before")
    @classmethod
    def _clamp_garland_chunk_size(cls, value: object) -> int:
        return _clamp_int(value, 1 << 18, 1 << 10, 1 << 24)

    @field_validator("NEWTON_MAX_ITERATIONS", mode="before")
    @classmethod
    def _clamp_newton_max_iterations(cls, value: object) -> int:
        return _clamp_int(value, 60, 1, 1000)

    @field_validator("NEWTON_TOLERANCE", mode="before")
    @classmethod
    def _clamp_newton_tolerance(cls, value: object) -> float:
        try:
            numeric = float(value) if value is not None else 1e-11
        except (TypeError, ValueError):
            numeric = 1e-11
        return min(1e-3, max(1e-15, numeric))

    @field_validator("SIMILARITY_MAX_CANDIDATES", mode="before")
    @classmethod
    def _clamp_similarity_max_candidates(cls, value: object) -> int:
        return _clamp_int(value, 4096, 1, 1 << 16)

    @field_validator("PRIME_GENERATOR_SEARCH_BOUND", mode="before")
    @classmethod
    def _clamp_prime_generator_search_bound(cls, value: object) -> int:
        return _clamp_int(value, 60, 1, 1000)


@lru_cache
def get_settings() -> Settings:
    """Settings 인스턴스를 반환한다. 최초 호출 시에만 생성되고 이후 캐싱된다."""
    return Settings()
