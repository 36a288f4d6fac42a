"""판정 결과와 분류에 쓰이는 Enum 정의."""

from enum import StrEnum


class SubdiagramType(StrEnum):
    """주 부분행렬(부분 다이어그램)의 유형."""

    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC_COMPACT = "hyperbolic-compact"
    HYPERBOLIC_NONCOMPACT = "hyperbolic-noncompact"
    INDEFINITE_OTHER = "indefinite-other"


class VertexKind(StrEnum):
    """단체 꼭짓점의 종류."""

    ORDINARY = "ordinary"
    IDEAL = "ideal"
    HYPERIDEAL = "hyperideal"


class ArithmeticClass(StrEnum):
    """반사군의 산술성 분류."""

    ARITHMETIC = "arithmetic"
    PROPERLY_QUASI_ARITHMETIC = "properly-quasi-arithmetic"
    UNDETERMINED = "quasi-arithmetic-undetermined-integrality"
    NOT_QUASI_ARITHMETIC = "not-quasi-arithmetic"


class IsometryVerdict(StrEnum):
    ISOMETRIC = "isometric"
    NOT_ISOMETRIC = "not-isometric"
    INCONCLUSIVE = "inconclusive"


class SimilarityVerdict(StrEnum):
    SIMILAR = "similar"
    NOT_SIMILAR = "not-similar"
    INCONCLUSIVE = "inconclusive"


class AssumptionVerdict(StrEnum):
    """가랜드 조각의 경계면 가정 판정."""

    TWO_SIDED = "two-sided"
    ONE_SIDED = "one-sided"
    FAILS = "fails"


class CheckVerdict(StrEnum):
    """리포트 검사 항목의 판정."""

    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
