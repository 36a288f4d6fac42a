"""trace field, 주변 형식 허용성, 산술성 분류 검사 노드."""

from __future__ import annotations

from app.coxeter.gram import gram_matrix
from app.graph.report.nodes.common import POLYHEDRA, SIMPLICES, data_path, extend
from app.graph.report.state import ReportState
from app.schemas.enums import ArithmeticClass
from app.services.checks import Observation, run_check
from app.services.commands import observe_classification, observe_trace_field
from app.services.dataset import load_diagram
from app.vinberg.ambient import admissible, ambient_form

_FIELD = "Q(sqrt 5)"
_EXPECTED_CLASSES = {
    "S1_4": ArithmeticClass.PROPERLY_QUASI_ARITHMETIC,
    "S2_4": ArithmeticClass.PROPERLY_QUASI_ARITHMETIC,
    "S1_5": ArithmeticClass.ARITHMETIC,
    "S2_5": ArithmeticClass.ARITHMETIC,
}


def check_trace_fields(state: ReportState) -> dict:
    records = []
    for name in [*SIMPLICES, *POLYHEDRA]:
        path = data_path(state, f"{name}.cox")
        records.append(
            run_check(
                f"tracefield {name}",
                lambda path=path: observe_trace_field(path),
                inputs=[str(path)],
                expected=_FIELD,
                timings=state.get("timings"),
            )
        )
    return extend(state, records)


def _admissibility(path, dimension: int) -> Observation:
    form = ambient_form(gram_matrix(load_diagram(path)))
    verdict = "admissible" if admissible(form, dimension) else "not admissible"
    nodes = ",".join(str(node + 1) for node in form.nodes)
    return Observation(f"{verdict} over {form.field.label}", {"nodes": nodes})


def check_ambient_forms(state: ReportState) -> dict:
    records = []
    for name, dimension in POLYHEDRA.items():
        path = data_path(state, f"{name}.cox")
        records.append(
            run_check(
                f"ambient {name}",
                lambda path=path, dimension=dimension: _admissibility(path, dimension),
                inputs=[str(path)],
                expected=f"admissible over {_FIELD}",
                timings=state.get("timings"),
            )
        )
    return extend(state, records)


def check_classifications(state: ReportState) -> dict:
    records = []
    for name, expected in _EXPECTED_CLASSES.items():
        path = data_path(state, f"{name}.cox")
        records.append(
            run_check(
                f"classify {name}",
                lambda path=path, dimension=SIMPLICES[name]: observe_classification(path, dimension),
                inputs=[str(path)],
                expected=f"{expected.value}, trace field {_FIELD}",
                timings=state.get("timings"),
            )
        )
    return extend(state, records)
