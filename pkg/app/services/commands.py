"""CLI 명령 하나를 실행해 Report 와 사람이 읽을 문자열을 만드는 서비스."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from app.core.errors import FieldMismatchError, GarlandWordError, NotASimplexError
from app.core.logger import get_logger
from app.coxeter.construct import truncate_simplex
from app.coxeter.diagram import CoxeterDiagram, serialize_diagram
from app.coxeter.gram import gram_matrix, gram_matrix_float
from app.coxeter.signature import Signature, signature, vertex_links
from app.coxeter.weights import solve_truncation_weights_numeric, verify_truncation_weights
from app.exact.expr import format_expr
from app.exact.linalg import Matrix
from app.garland.classify import classify_garland
from app.garland.words import (
    GarlandWord,
    census,
    count_by_volume,
    count_classes,
    expected_class_count,
    lower_bounds,
)
from app.qforms.forms import QuadraticForm
from app.qforms.similarity import SimilarityResult, similar_over_K
from app.schemas.enums import CheckVerdict, SimilarityVerdict
from app.schemas.report import CheckRecord, Report
from app.services.checks import Observation, run_check
from app.services.dataset import load_diagram, load_form, resolve_catalog
from app.vinberg.classify import classify
from app.vinberg.cyclic import trace_field

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class CommandResult:
    report: Report
    text: str


def _single(command: str, record: CheckRecord, text: str | None = None) -> CommandResult:
    return CommandResult(Report.from_checks(command, [record]), text if text is not None else record.observed or "")


def format_matrix(matrix: Matrix) -> str:
    return "\n".join(" ".join(format_expr(entry, compact=True) for entry in row) for row in matrix)


def float_signature(diagram: CoxeterDiagram, tolerance: float = 1e-9) -> Signature:
    eigenvalues = np.linalg.eigvalsh(gram_matrix_float(diagram))
    positive = int(np.sum(eigenvalues > tolerance))
    negative = int(np.sum(eigenvalues < -tolerance))
    return Signature(positive, negative, len(eigenvalues) - positive - negative)


def diagram_dimension(diagram: CoxeterDiagram) -> int:
    """signature (d, 1, ·) 에서 d 를 읽습니다."""
    shape = signature(gram_matrix(diagram))
    if shape.neg != 1:
        raise NotASimplexError(f"쌍곡 다면체의 그람 행렬이 아닙니다: signature={shape}")
    return shape.pos


def observe_gram(path: Path) -> Observation:
    return Observation(format_matrix(gram_matrix(load_diagram(path))))


def observe_signature(path: Path) -> Observation:
    diagram = load_diagram(path)
    exact = signature(gram_matrix(diagram))
    numeric = float_signature(diagram)
    return Observation(str(exact), {"float": str(numeric)})


def observe_trace_field(path: Path) -> Observation:
    return Observation(trace_field(gram_matrix(load_diagram(path))).label)


def observe_classification(path: Path, dimension: int | None = None) -> Observation:
    diagram = load_diagram(path)
    dimension = dimension or diagram_dimension(diagram)
    result = classify(gram_matrix(diagram), dimension)
    witnesses = {"class": result.verdict.value}
    if result.field is not None:
        witnesses["field"] = result.field.label
    if result.witness:
        witnesses["witness"] = result.witness
    if result.truncated:
        witnesses["truncated"] = ",".join(str(facet + 1) for facet in result.truncated)
    observed = result.verdict.value
    if result.field is not None:
        observed = f"{observed}, trace field {result.field.label}"
    return Observation(observed, witnesses)


def similarity_summary(result: SimilarityResult) -> str:
    certificate = result.certificate
    if result.verdict is SimilarityVerdict.SIMILAR:
        return f"similar: lambda={certificate.get('lambda', '1')}"
    if result.verdict is SimilarityVerdict.INCONCLUSIVE:
        return "inconclusive"
    reason = certificate.get("reason")
    if reason == "det-ratio":
        return f"not-similar: det ratio {certificate['ratio']} not a square (norm {certificate['norm']})"
    if reason == "signature":
        return f"not-similar: signature obstruction at {certificate['place']}"
    place = certificate.get("place", result.witness or "")
    generator = certificate.get("generator")
    where = f"{place}=({generator})" if generator else place
    return f"not-similar: Hasse mismatch at {where}"


def observe_similarity(first: QuadraticForm, second: QuadraticForm) -> Observation:
    result = similar_over_K(first, second)
    return Observation(similarity_summary(result), dict(result.certificate))


def cmd_gram(path: Path, expected: str | None = None, timings: bool = False) -> CommandResult:
    record = run_check(
        "gram", lambda: observe_gram(path), inputs=[str(path)], expected=expected, timings=timings, capture_errors=False
    )
    return _single("gram", record)


def cmd_signature(path: Path, expected: str | None = None, timings: bool = False) -> CommandResult:
    record = run_check(
        "signature",
        lambda: observe_signature(path),
        inputs=[str(path)],
        expected=expected,
        timings=timings,
        capture_errors=False,
    )
    return _single("signature", record)


def cmd_tracefield(path: Path, expected: str | None = None, timings: bool = False) -> CommandResult:
    record = run_check(
        "tracefield",
        lambda: observe_trace_field(path),
        inputs=[str(path)],
        expected=expected,
        timings=timings,
        capture_errors=False,
    )
    return _single("tracefield", record)


def cmd_classify(
    path: Path, dimension: int | None = None, expected: str | None = None, timings: bool = False
) -> CommandResult:
    record = run_check(
        "classify",
        lambda: observe_classification(path, dimension),
        inputs=[str(path)],
        expected=expected,
        timings=timings,
        capture_errors=False,
    )
    return _single("classify", record)


def cmd_similar(first: Path, second: Path, field_d: int | None = None, timings: bool = False) -> CommandResult:
    left, right = load_form(first), load_form(second)
    if field_d is not None and (left.field.d != field_d or right.field.d != field_d):
        raise FieldMismatchError(f"--field {field_d} 와 형식의 체 {left.field.label}, {right.field.label} 가 다릅니다.")
    record = run_check(
        "similar",
        lambda: observe_similarity(left, right),
        inputs=[str(first), str(second)],
        timings=timings,
        capture_errors=False,
    )
    if record.observed == "inconclusive":
        record = record.model_copy(update={"verdict": CheckVerdict.INCONCLUSIVE})
    return _single("similar", record)


def cmd_links(path: Path, timings: bool = False) -> CommandResult:
    def compute() -> Observation:
        links = vertex_links(load_diagram(path))
        lines = [f"vertex opposite {link.facet + 1}: {link.kind.value} ({link.link_type.value})" for link in links]
        witnesses = {f"facet {link.facet + 1}": link.kind.value for link in links}
        return Observation("\n".join(lines), witnesses)

    record = run_check("links", compute, inputs=[str(path)], timings=timings, capture_errors=False)
    return _single("links", record)


def cmd_show(path: Path) -> CommandResult:
    text = serialize_diagram(load_diagram(path))
    record = run_check("show", lambda: Observation(text), inputs=[str(path)], capture_errors=False)
    return _single("show", record, text.rstrip("\n"))


def cmd_truncate(path: Path) -> CommandResult:
    diagram = truncate_simplex(load_diagram(path))
    text = serialize_diagram(diagram)
    record = run_check("truncate", lambda: Observation(text), inputs=[str(path)], capture_errors=False)
    return _single("truncate", record, text.rstrip("\n"))


def cmd_verify_weights(path: Path, dimension: int, timings: bool = False) -> CommandResult:
    diagram = load_diagram(path)
    result = verify_truncation_weights(diagram, dimension)
    checks = [
        run_check(
            f"weights {check.name}",
            lambda check=check: Observation(
                check.observed, verdict=CheckVerdict.PASS if check.passed else CheckVerdict.FAIL
            ),
            inputs=[str(path)],
            timings=timings,
        )
        for check in result.checks
    ]
    report = Report.from_checks("verify-weights", checks)
    text = "\n".join(f"{check.name}: {check.verdict.value} ({check.observed})" for check in checks)
    return CommandResult(report, text)


def cmd_solve_weights(path: Path, dimension: int, timings: bool = False) -> CommandResult:
    def compute() -> Observation:
        solutions = solve_truncation_weights_numeric(load_diagram(path), dimension)
        lines = []
        witnesses = {}
        for index, solution in enumerate(solutions, start=1):
            parts = [f"{i + 1}-{j + 1}={value:.10f}" for (i, j), value in sorted(solution.weights.items())]
            lines.append(f"solution {index}: " + " ".join(parts) + f" residual={solution.residual:.2e}")
            witnesses[f"solution {index}"] = " ".join(parts)
        return Observation("\n".join(lines), witnesses)

    record = run_check("solve-weights", compute, inputs=[str(path)], timings=timings, capture_errors=False)
    return _single("solve-weights", record)


def garland_count_record(n: int, timings: bool = False, capture_errors: bool = False) -> CheckRecord:
    def compute() -> Observation:
        count = count_classes(n)
        expected = expected_class_count(n)
        half, full = lower_bounds(n)
        passed = count == expected and count >= half and count >= full
        witnesses = {
            "closed form": str(expected),
            "bound 2^n/(2n)": str(half),
            "bound 2^n/n": str(full),
        }
        return Observation(str(count), witnesses, CheckVerdict.PASS if passed else CheckVerdict.FAIL)

    return run_check(f"garland count n={n}", compute, inputs=[str(n)], timings=timings, capture_errors=capture_errors)


def cmd_garland_count(n: int, timings: bool = False) -> CommandResult:
    return _single("garland count", garland_count_record(n, timings))


def cmd_garland_census(n: int, timings: bool = False) -> CommandResult:
    def compute() -> Observation:
        classes = census(n)
        lines = [" ~ ".join(str(member) for member in members) for members in classes]
        return Observation("\n".join(lines), {"classes": str(len(classes))})

    record = run_check("garland census", compute, inputs=[str(n)], timings=timings, capture_errors=False)
    return _single("garland census", record)


def cmd_garland_classify(
    word: str, catalog: str, data_dir: Path | None = None, expected: str | None = None, timings: bool = False
) -> CommandResult:
    def compute() -> Observation:
        loaded = resolve_catalog(catalog, data_dir)
        parsed = GarlandWord.parse(word)
        return Observation(classify_garland(loaded, parsed).value, {"catalog": loaded.name, "word": str(parsed)})

    record = run_check(
        "garland classify", compute, inputs=[word, catalog], expected=expected, timings=timings, capture_errors=False
    )
    return _single("garland classify", record)


def cmd_garland_volume(
    budget: str, catalog: str | None = None, data_dir: Path | None = None, timings: bool = False
) -> CommandResult:
    def compute() -> Observation:
        volumes = resolve_catalog(catalog, data_dir).volumes if catalog else (Fraction(1), Fraction(1))
        try:
            limit = Fraction(budget)
        except (ValueError, ZeroDivisionError) as exc:
            raise GarlandWordError(f"부피 한도를 유리수로 읽을 수 없습니다: {budget!r}") from exc
        total = count_by_volume(limit, volumes)
        return Observation(str(total), {"volumes": f"{volumes[0]},{volumes[1]}"})

    inputs = [budget] + ([catalog] if catalog else [])
    record = run_check("garland volume", compute, inputs=inputs, timings=timings, capture_errors=False)
    return _single("garland volume", record)
