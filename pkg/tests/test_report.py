"""paper-report 그래프 전체 실행 테스트."""

import shutil
from pathlib import Path

import pytest

from app.cli import EXIT_FAIL, EXIT_PASS, run
from app.schemas.enums import CheckVerdict
from app.services.report_service import run_paper_report


@pytest.fixture
def copied_data(data_dir: Path, tmp_path: Path) -> Path:
    target = tmp_path / "data"
    shutil.copytree(data_dir, target)
    return target


def test_bundled_dataset_passes(data_dir: Path) -> None:
    report = run_paper_report(data_dir, max_garland_length=6)

    failed = [(check.name, check.observed) for check in report.checks if check.verdict is not CheckVerdict.PASS]
    assert failed == []
    assert report.command == "paper-report"
    assert report.verdict is CheckVerdict.PASS


def test_report_covers_every_stage(data_dir: Path) -> None:
    names = [check.name for check in run_paper_report(data_dir, max_garland_length=3).checks]

    for expected in (
        "signature S1_4",
        "links S1_5",
        "tracefield P",
        "ambient P",
        "classify S1_4",
        "ambient S1_4 Q1_4",
        "ambient S2_5 Q2_5",
        "similar Q1_4 Q2_4",
        "similar Q1_5 Q2_5",
        "norms",
        "weights P1_4",
        "garland count n=3",
        "assumption h5 piece 1",
        "garland classify h5 222",
        "garland diagram h4 12",
        "garland diagram h5 L1",
    ):
        assert expected in names
    assert names.index("signature S1_4") < names.index("tracefield P") < names.index("garland count n=1")
    assert "garland count n=4" not in names


def test_perturbed_weight_fails_report(copied_data: Path) -> None:
    path = copied_data / "P1_4.cox"
    text = path.read_text(encoding="utf-8")
    path.write_text(text.replace("edge 6 7 dotted w=sqrt(3+sqrt(5))/sqrt(13-5*sqrt(5))", "edge 6 7 dotted w=2"))

    report = run_paper_report(copied_data, max_garland_length=2)

    failed = {check.name for check in report.checks if check.verdict is CheckVerdict.FAIL}
    assert report.verdict is CheckVerdict.FAIL
    assert "weights P1_4" in failed


def test_swapped_forms_fail_similarity_checks(copied_data: Path) -> None:
    shutil.copy(copied_data / "Q1_4.form", copied_data / "Q2_4.form")

    report = run_paper_report(copied_data, max_garland_length=2)

    failed = {check.name for check in report.checks if check.verdict is CheckVerdict.FAIL}
    assert "similar Q1_4 Q2_4" in failed
    assert "hasse p5 Q1_4 Q2_4" in failed
    assert "ambient S2_4 Q2_4" in failed
    assert "ambient S1_4 Q1_4" not in failed


def test_timings_are_attached_only_on_request(data_dir: Path) -> None:
    plain = run_paper_report(data_dir, max_garland_length=1)
    timed = run_paper_report(data_dir, timings=True, max_garland_length=1)

    assert all(check.timing_ms is None for check in plain.checks)
    assert all(check.timing_ms is not None for check in timed.checks)


def test_cli_paper_report_exit_codes(data_dir: Path, copied_data: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["paper-report", "--data-dir", str(data_dir), "--max-garland-length", "2"]) == EXIT_PASS
    assert capsys.readouterr().out.splitlines()[-1] == "pass"

    shutil.copy(copied_data / "Q1_5.form", copied_data / "Q2_5.form")
    assert run(["paper-report", "--data-dir", str(copied_data), "--max-garland-length", "2"]) == EXIT_FAIL
    assert capsys.readouterr().out.splitlines()[-1] == "fail"
