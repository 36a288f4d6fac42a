"""도메인 예외 계층."""

from __future__ import annotations


class CoxeterArithError(Exception):
    """패키지 전체의 최상위 예외."""


# exact
class TowerMismatchError(CoxeterArithError, ValueError):
    pass


class TowerDivisionError(CoxeterArithError, ZeroDivisionError):
    pass


class NegativeRadicandError(CoxeterArithError, ValueError):
    pass


class InconsistentEmbeddingError(CoxeterArithError, ValueError):
    pass


class FormalGeneratorError(CoxeterArithError, ValueError):
    pass


class PrecisionExhaustedError(CoxeterArithError, RuntimeError):
    pass


class ExpressionSyntaxError(CoxeterArithError, ValueError):
    """EXPR 구문 오류. 위치(0부터 시작하는 문자 오프셋)를 함께 보관합니다."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (위치 {position})")
        self.position = position


# quadfield
class FieldMismatchError(CoxeterArithError, ValueError):
    pass


class DyadicPlaceError(CoxeterArithError, ValueError):
    pass


class NotAUnitError(CoxeterArithError, ValueError):
    pass


# coxeter
class DiagramSyntaxError(CoxeterArithError, ValueError):
    """다이어그램 파일 구문 오류. 줄/열 번호(1부터 시작)를 보관합니다."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class UnsupportedLabelError(CoxeterArithError, ValueError):
    pass


class UnknownWeightError(CoxeterArithError, ValueError):
    pass


class NotASimplexError(CoxeterArithError, ValueError):
    pass


class DoublingError(CoxeterArithError, ValueError):
    pass


class TruncationError(CoxeterArithError, ValueError):
    pass


class NoConvergenceError(CoxeterArithError, RuntimeError):
    pass


# vinberg
class TraceFieldError(CoxeterArithError, ValueError):
    pass


class AmbientFormError(CoxeterArithError, ValueError):
    pass


class DegenerateFormError(CoxeterArithError, ValueError):
    pass


class VerificationError(CoxeterArithError, AssertionError):
    pass


# qforms
class FormSyntaxError(CoxeterArithError, ValueError):
    pass


class DimensionMismatchError(CoxeterArithError, ValueError):
    pass


# garland
class GarlandWordError(CoxeterArithError, ValueError):
    pass


class CatalogError(CoxeterArithError, ValueError):
    pass


class InfeasibleSizeError(CoxeterArithError, ValueError):
    pass


class GluingError(CoxeterArithError, ValueError):
    pass
