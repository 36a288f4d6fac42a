"""주변 이차형식의 닮음 장애 검사 노드."""

from __future__ import annotations

from fractions import Fraction

from app.coxeter.gram import gram_matrix
from app.graph.report.nodes.common import data_path, extend
from app.graph.report.state import ReportState
from app.qforms.forms import diagonalize
from app.qforms.invariants import hasse_invariant
from app.qforms.similarity import similar_over_K
from app.quadfield.field import norm_trace, quad_field
from app.quadfield.primes import factor_rational_prime
from app.schemas.enums import CheckVerdict, SimilarityVerdict
from app.services.checks import Observation, run_check
from app.services.commands import similarity_summary
from app.services.dataset import load_diagram, load_form
from app.vinberg.ambient import ambient_quadratic_form

_FORM_SOURCES = (("S1_4", "Q1_4"), ("S2_4", "Q2_4"), ("S1_5", "Q1_5"), ("S2_5", "Q2_5"))


def _form_matches_diagram(state: ReportState, diagram: str, form: str) -> Observation:
    derived = ambient_quadratic_form(gram_matrix(load_diagram(data_path(state, f"{diagram}.cox"))), name=diagram)
    result = similar_over_K(derived, load_form(data_path(state, f"{form}.form")))
    return Observation(str(result.verdict), dict(result.certificate))


def _hasse_obstruction(state: ReportState) -> Observation:
    result = similar_over_K(load_form(data_path(state, "Q1_4.form")), load_form(data_path(state, "Q2_4.form")))
    passed = (
        result.verdict is SimilarityVerdict.NOT_SIMILAR
        and result.certificate.get("reason") == "hasse"
        and result.certificate.get("place") == "p5"
    )
    verdict = CheckVerdict.PASS if passed else CheckVerdict.FAIL
    return Observation(similarity_summary(result), dict(result.certificate), verdict)


def _determinant_obstruction(state: ReportState) -> Observation:
    result = similar_over_K(load_form(data_path(state, "Q1_5.form")), load_form(data_path(state, "Q2_5.form")))
    passed = (
        result.verdict is SimilarityVerdict.NOT_SIMILAR
        and result.certificate.get("reason") == "det-ratio"
        and result.certificate.get("norm") == "11/16"
    )
    verdict = CheckVerdict.PASS if passed else CheckVerdict.FAIL
    return Observation(similarity_summary(result), dict(result.certificate), verdict)


def _hasse_values(state: ReportState) -> Observation:
    """두 대각화 순서에서 𝔭₅ 의 하세 불변량이 일치하고 두 형식 사이에서 다른지 확인합니다."""
    values = {}
    for name in ("Q1_4", "Q2_4"):
        form = load_form(data_path(state, f"{name}.form"))
        prime = factor_rational_prime(5, form.field)[0][0]
        forward = hasse_invariant(diagonalize(form), prime)
        backward = hasse_invariant(diagonalize(form, list(reversed(range(form.dimension)))), prime)
        if forward != backward:
            return Observation(f"{name}: {forward} != {backward}", verdict=CheckVerdict.FAIL)
        values[name] = forward
    differ = values["Q1_4"] != values["Q2_4"]
    observed = f"Q1_4={values['Q1_4']} Q2_4={values['Q2_4']}"
    return Observation(observed, {"p5": observed}, CheckVerdict.PASS if differ else CheckVerdict.FAIL)


def _norm_identities() -> Observation:
    field = quad_field(5)
    a = field.element(Fraction(1, 2), Fraction(1, 2))
    small, _ = norm_trace(field.element(4) - a, field)
    large, _ = norm_trace(field.element(8) - a * 2, field)
    return Observation(f"N(4-a)={small} N(8-2a)={large}")


def check_similarity(state: ReportState) -> dict:
    timings = state.get("timings")
    records = [
        *(
            run_check(
                f"ambient {diagram} {form}",
                lambda diagram=diagram, form=form: _form_matches_diagram(state, diagram, form),
                inputs=[diagram, form],
                expected=str(SimilarityVerdict.SIMILAR),
                timings=timings,
            )
            for diagram, form in _FORM_SOURCES
        ),
        run_check("similar Q1_4 Q2_4", lambda: _hasse_obstruction(state), inputs=["Q1_4", "Q2_4"], timings=timings),
        run_check(
            "similar Q1_5 Q2_5", lambda: _determinant_obstruction(state), inputs=["Q1_5", "Q2_5"], timings=timings
        ),
        run_check("hasse p5 Q1_4 Q2_4", lambda: _hasse_values(state), inputs=["Q1_4", "Q2_4"], timings=timings),
        run_check("norms", _norm_identities, expected="N(4-a)=11 N(8-2a)=44", timings=timings),
    ]
    return extend(state, records)
