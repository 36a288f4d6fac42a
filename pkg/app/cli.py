"""argparse 기반 명령행 인터페이스."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from app.core.config import get_settings
from app.core.errors import CoxeterArithError
from app.core.logger import get_logger
from app.core.logging_config import configure_logging
from app.core.precision_policy import build_precision_policy, override_precision_policy
from app.schemas.enums import CheckVerdict
from app.schemas.report import Report
from app.services import commands
from app.services.commands import CommandResult
from app.services.report_service import run_paper_report

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def _add_expect(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--expect", help="기대값. 주어지면 pass/fail 검사가 됩니다.")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Report 스키마 JSON 출력")
    parser.add_argument("--precision", type=int, metavar="BITS", help="구간 계산 시작 정밀도 (비트)")
    parser.add_argument("--timings", action="store_true", help="검사별 소요 시간 기록")
    parser.add_argument("--log-level", help="로그 레벨 (기본 WARNING, 환경변수 LOG_LEVEL)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxeter-arith", description="쌍곡 Coxeter 다면체의 산술 불변량")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("gram", "그람 행렬"),
        ("signature", "그람 행렬의 signature"),
        ("tracefield", "Vinberg trace field"),
    ):
        command = sub.add_parser(name, help=help_text)
        command.add_argument("diagram", type=Path)
        _add_expect(command)
        _add_common(command)

    classify_parser = sub.add_parser("classify", help="산술성 분류")
    classify_parser.add_argument("diagram", type=Path)
    classify_parser.add_argument("--dimension", type=int, help="쌍곡 공간 차원 (기본: signature 에서 읽음)")
    _add_expect(classify_parser)
    _add_common(classify_parser)

    similar_parser = sub.add_parser("similar", help="두 이차형식의 닮음 판정")
    similar_parser.add_argument("first", type=Path)
    similar_parser.add_argument("second", type=Path)
    similar_parser.add_argument("--field", type=int, metavar="D", help="형식이 Q(sqrt D) 위에 있는지 확인")
    _add_common(similar_parser)

    for name, help_text in (("links", "꼭짓점 링크 분류"), ("show", "정규 다이어그램 출력"), ("truncate", "단체 절단")):
        command = sub.add_parser(name, help=help_text)
        command.add_argument("diagram", type=Path)
        _add_common(command)

    for name, help_text in (("verify-weights", "닫힌 꼴 가중치 검증"), ("solve-weights", "미지 가중치 수치 풀이")):
        command = sub.add_parser(name, help=help_text)
        command.add_argument("diagram", type=Path)
        command.add_argument("--dimension", type=int, required=True)
        _add_common(command)

    garland = sub.add_parser("garland", help="가랜드 조합론")
    garland_sub = garland.add_subparsers(dest="garland_command", required=True)
    count = garland_sub.add_parser("count", help="길이 n 단어의 류 개수")
    count.add_argument("--n", type=int, required=True)
    _add_common(count)
    census = garland_sub.add_parser("census", help="길이 n 단어의 류 목록")
    census.add_argument("--n", type=int, required=True)
    _add_common(census)
    garland_classify = garland_sub.add_parser("classify", help="가랜드 산술성 분류")
    garland_classify.add_argument("--word", required=True)
    garland_classify.add_argument("--catalog", required=True, help="h4, h5 또는 카탈로그 파일 경로")
    garland_classify.add_argument("--data-dir", type=Path)
    _add_expect(garland_classify)
    _add_common(garland_classify)
    volume = garland_sub.add_parser("volume", help="부피 한도 안의 류 개수")
    volume.add_argument("--budget", required=True, help="양의 유리수 V")
    volume.add_argument("--catalog", help="조각 부피를 읽을 카탈로그 (기본: 둘 다 1)")
    volume.add_argument("--data-dir", type=Path)
    _add_common(volume)

    report = sub.add_parser("paper-report", help="번들 데이터셋 전체 재현 검사")
    report.add_argument("--data-dir", type=Path)
    report.add_argument("--max-garland-length", type=int, default=12)
    _add_common(report)
    return parser


def _dispatch(args: argparse.Namespace) -> CommandResult:
    timings = args.timings
    match args.command:
        case "gram":
            return commands.cmd_gram(args.diagram, args.expect, timings)
        case "signature":
            return commands.cmd_signature(args.diagram, args.expect, timings)
        case "tracefield":
            return commands.cmd_tracefield(args.diagram, args.expect, timings)
        case "classify":
            return commands.cmd_classify(args.diagram, args.dimension, args.expect, timings)
        case "similar":
            return commands.cmd_similar(args.first, args.second, args.field, timings)
        case "links":
            return commands.cmd_links(args.diagram, timings)
        case "show":
            return commands.cmd_show(args.diagram)
        case "truncate":
            return commands.cmd_truncate(args.diagram)
        case "verify-weights":
            return commands.cmd_verify_weights(args.diagram, args.dimension, timings)
        case "solve-weights":
            return commands.cmd_solve_weights(args.diagram, args.dimension, timings)
        case "garland":
            return _dispatch_garland(args)
        case "paper-report":
            report = run_paper_report(args.data_dir, timings=timings, max_garland_length=args.max_garland_length)
            return CommandResult(report, render_report(report))
    raise CoxeterArithError(f"알 수 없는 명령입니다: {args.command}")


def _dispatch_garland(args: argparse.Namespace) -> CommandResult:
    timings = args.timings
    match args.garland_command:
        case "count":
            return commands.cmd_garland_count(args.n, timings)
        case "census":
            return commands.cmd_garland_census(args.n, timings)
        case "classify":
            return commands.cmd_garland_classify(args.word, args.catalog, args.data_dir, args.expect, timings)
        case "volume":
            return commands.cmd_garland_volume(args.budget, args.catalog, args.data_dir, timings)
    raise CoxeterArithError(f"알 수 없는 garland 명령입니다: {args.garland_command}")


def render_report(report: Report) -> str:
    lines = []
    for check in report.checks:
        line = f"{check.verdict.value:<12} {check.name}: {check.observed}"
        if check.verdict is not CheckVerdict.PASS and check.expected is not None:
            line += f" (expected {check.expected})"
        lines.append(line)
    lines.append(report.verdict.value)
    return "\n".join(lines)


def _exit_code(report: Report) -> int:
    return EXIT_PASS if report.verdict is CheckVerdict.PASS else EXIT_FAIL


def run(argv: Sequence[str] | None = None) -> int:
    """명령을 실행하고 종료 코드를 반환합니다: 0 pass, 1 fail 또는 inconclusive, 2 오류."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        policy = build_precision_policy(get_settings(), start_bits=args.precision)
        with override_precision_policy(policy):
            result = _dispatch(args)
    except (CoxeterArithError, OSError) as exc:
        logger.debug("command failed command=%s error=%r", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(result.report.model_dump_json(indent=2, exclude_none=True))
    else:
        print(result.text)
        if getattr(args, "expect", None) is not None:
            print(result.report.verdict.value)
    return _exit_code(result.report)
