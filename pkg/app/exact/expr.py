"""근호 식(EXPR) 파서와 정규 직렬화.

문법:
    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := INT | INT '/' INT | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from app.core.errors import ExpressionSyntaxError
from app.exact.radicals import adjoin_sqrt
from app.exact.tower import Tower, TowerElement, format_element


@dataclass(slots=True)
class _Context:
    """파싱 위치와 지금까지 자란 탑을 함께 들고 다닙니다."""

    text: str
    pos: int
    tower: Tower

    def at(self) -> str | None:
        self.skip_spaces()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, char: str) -> None:
        if self.at() != char:
            raise ExpressionSyntaxError(f"'{char}' 가 필요합니다", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExpressionSyntaxError("정수가 필요합니다", start)
        return int(self.text[start : self.pos])


def _expr(ctx: _Context) -> TowerElement:
    value = _term(ctx)
    while (char := ctx.at()) in ("+", "-"):
        ctx.pos += 1
        right = _term(ctx)
        value = value + right if char == "+" else value - right
    return value


def _term(ctx: _Context) -> TowerElement:
    value = _factor(ctx)
    while (char := ctx.at()) in ("*", "/"):
        ctx.pos += 1
        right = _factor(ctx)
        value = value * right if char == "*" else value / right
    return value


def _factor(ctx: _Context) -> TowerElement:
    char = ctx.at()
    if char is None:
        raise ExpressionSyntaxError("식이 예상보다 일찍 끝났습니다", ctx.pos)
    if char == "-":
        ctx.pos += 1
        return -_factor(ctx)
    if char == "(":
        ctx.pos += 1
        value = _expr(ctx)
        ctx.expect(")")
        return value
    if char.isdigit():
        numerator = ctx.integer()
        mark = ctx.pos
        if ctx.at() == "/":
            ctx.pos += 1
            ctx.skip_spaces()
            if ctx.pos < len(ctx.text) and ctx.text[ctx.pos].isdigit():
                denominator = ctx.integer()
                if denominator == 0:
                    raise ExpressionSyntaxError("분모가 0 입니다", mark)
                return ctx.tower.rational(Fraction(numerator, denominator))
            ctx.pos = mark
        return ctx.tower.rational(numerator)
    if ctx.text.startswith("sqrt", ctx.pos):
        ctx.pos += len("sqrt")
        ctx.expect("(")
        radicand = _expr(ctx)
        ctx.expect(")")
        ctx.tower, root = adjoin_sqrt(ctx.tower, radicand)
        return root
    raise ExpressionSyntaxError(f"예상하지 못한 문자 '{char}'", ctx.pos)


def parse_expr(text: str, tower: Tower | None = None) -> tuple[TowerElement, Tower]:
    """EXPR 문자열을 해석하여 원소와 (필요하면 확장된) 탑을 반환합니다."""
    ctx = _Context(text=text, pos=0, tower=tower or Tower())
    value = _expr(ctx)
    if ctx.at() is not None:
        raise ExpressionSyntaxError(f"예상하지 못한 문자 '{ctx.at()}'", ctx.pos)
    return value.lift(ctx.tower), ctx.tower


def format_expr(x: TowerElement, *, compact: bool = False) -> str:
    """정규 EXPR 문자열. compact 이면 공백 없이 씁니다."""
    return format_element(x, compact=compact)
