"""가랜드 류 세기와 분류 규칙 검사 노드."""

from __future__ import annotations

from app.garland.catalog import Catalog, load_catalog
from app.garland.classify import classify_garland
from app.garland.gluing import check_assumption, garland_diagram
from app.garland.words import GarlandWord, capped_word
from app.graph.report.nodes.common import data_path, extend
from app.graph.report.state import ReportState
from app.schemas.enums import ArithmeticClass, AssumptionVerdict
from app.services.checks import Observation, run_check
from app.services.commands import garland_count_record

_DEFAULT_MAX_LENGTH = 12
_EXPECTED_CLASSES = (
    ("h4", "121", ArithmeticClass.NOT_QUASI_ARITHMETIC),
    ("h4", "11", ArithmeticClass.PROPERLY_QUASI_ARITHMETIC),
    ("h5", "222", ArithmeticClass.ARITHMETIC),
)
_EXPECTED_ASSUMPTIONS = (
    ("h4", 1, AssumptionVerdict.TWO_SIDED),
    ("h4", 2, AssumptionVerdict.TWO_SIDED),
    ("h5", 1, AssumptionVerdict.ONE_SIDED),
    ("h5", 2, AssumptionVerdict.TWO_SIDED),
)


def check_garlands(state: ReportState) -> dict:
    timings = state.get("timings")
    catalogs: dict[str, Catalog] = {}

    def catalog(name: str) -> Catalog:
        if name not in catalogs:
            catalogs[name] = load_catalog(data_path(state, f"catalog_{name}.toml"))
        return catalogs[name]

    records = [
        garland_count_record(n, timings, capture_errors=True)
        for n in range(1, state.get("max_garland_length", _DEFAULT_MAX_LENGTH) + 1)
    ]
    for name, letter, expected in _EXPECTED_ASSUMPTIONS:

        def assumption(name=name, letter=letter) -> Observation:
            piece = catalog(name).piece(letter)
            result = check_assumption(piece.diagram, piece.boundary)
            return Observation(result.verdict.value, {"reason": result.reason} if result.reason else None)

        records.append(
            run_check(f"assumption {name} piece {letter}", assumption, expected=expected.value, timings=timings)
        )
    for name, word, expected in _EXPECTED_CLASSES:
        records.append(
            run_check(
                f"garland classify {name} {word}",
                lambda name=name, word=word: Observation(
                    classify_garland(catalog(name), GarlandWord.parse(word)).value
                ),
                inputs=[word, name],
                expected=expected.value,
                timings=timings,
            )
        )
    records.append(
        run_check(
            "garland diagram h4 12",
            lambda: Observation(f"nodes={garland_diagram(catalog('h4'), GarlandWord.parse('12')).n}"),
            expected="nodes=10",
            timings=timings,
        )
    )
    records.append(
        run_check(
            "garland diagram h5 L1",
            lambda: Observation(f"nodes={garland_diagram(catalog('h5'), capped_word(1)).n}"),
            expected="nodes=8",
            timings=timings,
        )
    )
    return extend(state, records)
