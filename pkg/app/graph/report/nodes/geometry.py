"""signature, 꼭짓점 링크, 절단 가중치 검사 노드."""

from __future__ import annotations

from app.core.logger import get_logger
from app.coxeter.signature import vertex_links
from app.coxeter.weights import verify_truncation_weights
from app.graph.report.nodes.common import POLYHEDRA, data_path, extend
from app.graph.report.state import ReportState
from app.schemas.enums import CheckVerdict, VertexKind
from app.services.checks import Observation, run_check
from app.services.commands import observe_signature
from app.services.dataset import load_diagram

logger = get_logger(__name__)

_EXPECTED_SIGNATURES = {
    "S1_4": "(4,1,0)",
    "S2_4": "(4,1,0)",
    "S1_5": "(5,1,0)",
    "S2_5": "(5,1,0)",
    "P1_4": "(4,1,2)",
    "P2_4": "(4,1,2)",
    "P1_5": "(5,1,1)",
    "P": "(5,1,1)",
}
# 보통 꼭짓점 개수와 초이상 꼭짓점의 맞은편 면
_EXPECTED_LINKS = {
    "S1_4": "ordinary=3 hyperideal=1,5",
    "S2_4": "ordinary=3 hyperideal=1,5",
    "S1_5": "ordinary=5 hyperideal=6",
    "S2_5": "ordinary=5 hyperideal=6",
}


def check_signatures(state: ReportState) -> dict:
    records = []
    for name, expected in _EXPECTED_SIGNATURES.items():
        path = data_path(state, f"{name}.cox")

        def compute(path=path) -> Observation:
            observation = observe_signature(path)
            agrees = observation.witnesses["float"] == observation.observed
            return Observation(observation.observed, observation.witnesses, None if agrees else CheckVerdict.FAIL)

        records.append(
            run_check(f"signature {name}", compute, inputs=[str(path)], expected=expected, timings=state.get("timings"))
        )
    return extend(state, records)


def _link_summary(path) -> Observation:
    links = vertex_links(load_diagram(path))
    ordinary = sum(link.kind is VertexKind.ORDINARY for link in links)
    hyperideal = ",".join(str(link.facet + 1) for link in links if link.kind is VertexKind.HYPERIDEAL)
    witnesses = {f"facet {link.facet + 1}": link.link_type.value for link in links}
    return Observation(f"ordinary={ordinary} hyperideal={hyperideal}", witnesses)


def check_vertex_links(state: ReportState) -> dict:
    records = []
    for name, expected in _EXPECTED_LINKS.items():
        path = data_path(state, f"{name}.cox")
        records.append(
            run_check(
                f"links {name}",
                lambda path=path: _link_summary(path),
                inputs=[str(path)],
                expected=expected,
                timings=state.get("timings"),
            )
        )
    return extend(state, records)


def check_weights(state: ReportState) -> dict:
    """번들 다면체의 닫힌 꼴 가중치가 소행렬식, 행렬식, signature 조건을 정확히 만족하는지 확인합니다."""
    records = []
    for name, dimension in POLYHEDRA.items():
        path = data_path(state, f"{name}.cox")

        def compute(path=path, dimension=dimension) -> Observation:
            result = verify_truncation_weights(load_diagram(path), dimension)
            failed = [check.name for check in result.checks if not check.passed]
            witnesses = {check.name: check.observed for check in result.checks if not check.passed}
            verdict = CheckVerdict.PASS if result.passed else CheckVerdict.FAIL
            observed = "all zero" if result.passed else "failed: " + ", ".join(failed)
            return Observation(observed, witnesses, verdict)

        records.append(run_check(f"weights {name}", compute, inputs=[str(path)], timings=state.get("timings")))
    logger.info("check_weights polyhedra=%d", len(records))
    return extend(state, records)
