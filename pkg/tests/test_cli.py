"""명령행 종료 코드와 출력 테스트."""

import json
from pathlib import Path

import pytest

from app.cli import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, build_parser, run


def test_signature_with_matching_expectation_passes(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = run(["signature", str(data_dir / "S1_4.cox"), "--expect", "(4,1,0)"])

    out = capsys.readouterr().out
    assert code == EXIT_PASS
    assert out.splitlines() == ["(4,1,0)", "pass"]


def test_mismatched_expectation_fails(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = run(["tracefield", str(data_dir / "P.cox"), "--expect", "Q"])

    out = capsys.readouterr().out
    assert code == EXIT_FAIL
    assert out.splitlines() == ["Q(sqrt 5)", "fail"]


def test_missing_file_is_an_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = run(["gram", str(tmp_path / "absent.cox")])

    assert code == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error: ")


def test_malformed_diagram_is_an_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "bad.cox"
    path.write_text("vertices 2\nedge 1 3 m=3\n", encoding="utf-8")

    assert run(["show", str(path)]) == EXIT_ERROR
    assert "error: " in capsys.readouterr().err


def test_classify_reads_dimension_from_signature(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = run(["classify", str(data_dir / "S1_5.cox"), "--expect", "arithmetic, trace field Q(sqrt 5)"])

    assert code == EXIT_PASS
    assert capsys.readouterr().out.splitlines()[-1] == "pass"


def test_similar_prints_certificate_summary(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = run(["similar", str(data_dir / "Q1_4.form"), str(data_dir / "Q2_4.form"), "--field", "5"])

    assert code == EXIT_PASS
    assert capsys.readouterr().out.strip() == "not-similar: Hasse mismatch at p5=(sqrt(5))"


def test_similar_rejects_wrong_field(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = run(["similar", str(data_dir / "Q1_5.form"), str(data_dir / "Q2_5.form"), "--field", "2"])

    assert code == EXIT_ERROR
    assert "error: " in capsys.readouterr().err


def test_show_prints_canonical_text(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = data_dir / "P1_4.cox"

    assert run(["show", str(path)]) == EXIT_PASS
    assert capsys.readouterr().out == path.read_text(encoding="utf-8")


def test_json_output_is_deterministic(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["similar", str(data_dir / "Q1_5.form"), str(data_dir / "Q2_5.form"), "--json"]

    run(argv)
    first = capsys.readouterr().out
    run(argv)
    second = capsys.readouterr().out

    assert first == second
    payload = json.loads(first)
    assert payload["command"] == "similar"
    assert payload["verdict"] == "pass"
    assert payload["checks"][0]["witnesses"]["reason"] == "det-ratio"
    assert "timing_ms" not in payload["checks"][0]


def test_timings_are_recorded_on_request(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    run(["tracefield", str(data_dir / "S1_4.cox"), "--json", "--timings", "--precision", "64"])

    payload = json.loads(capsys.readouterr().out)
    assert payload["checks"][0]["timing_ms"] >= 0


def test_garland_count_and_volume(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["garland", "count", "--n", "10"]) == EXIT_PASS
    assert capsys.readouterr().out.strip() == "516"
    assert run(["garland", "volume", "--budget", "3"]) == EXIT_PASS
    assert capsys.readouterr().out.strip() == "11"


def test_garland_volume_rejects_malformed_budget(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["garland", "volume", "--budget", "three"]) == EXIT_ERROR
    assert "error: " in capsys.readouterr().err


def test_garland_census_lists_classes(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["garland", "census", "--n", "2"]) == EXIT_PASS
    assert capsys.readouterr().out.splitlines() == ["11", "12 ~ 21", "22"]


@pytest.mark.parametrize(
    ("catalog", "word", "expected"),
    [
        ("h4", "121", "not-quasi-arithmetic"),
        ("h5", "222", "arithmetic"),
    ],
)
def test_garland_classify_with_expectation(
    data_dir: Path, capsys: pytest.CaptureFixture[str], catalog: str, word: str, expected: str
) -> None:
    argv = ["garland", "classify", "--word", word, "--catalog", catalog, "--data-dir", str(data_dir)]

    assert run([*argv, "--expect", expected]) == EXIT_PASS
    assert capsys.readouterr().out.splitlines() == [expected, "pass"]


def test_garland_word_outside_alphabet_is_an_error(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["garland", "classify", "--word", "123", "--catalog", "h4", "--data-dir", str(data_dir)]

    assert run(argv) == EXIT_ERROR
    capsys.readouterr()


def test_verify_weights_reports_each_minor(data_dir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["verify-weights", str(data_dir / "P1_4.cox"), "--dimension", "4"]) == EXIT_PASS

    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("weights minor[1,2,3,4,5,6]: pass")
    assert lines[-1].startswith("weights signature: pass")


def test_unknown_subcommand_exits_through_argparse(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        build_parser().parse_args(["volume"])

    assert exc_info.value.code == 2
    capsys.readouterr()
