import json

import pytest

from amdesigns import __main__
from amdesigns.am import TheoremVerdict
from amdesigns.codes import weight_distribution
from amdesigns.io import parse_code_file, parse_json


def _run_json(capsys, argv):
    code = __main__.main(argv + ["--json"])
    return code, parse_json(capsys.readouterr().out)


def test_am_on_extended_golay(capsys):
    code, report = _run_json(capsys, ["am", "--fixture", "golay12"])
    assert code == 0
    assert report.kind == "am"
    assert report.payload["am"]["t"] == "5"
    assert report.payload["am"]["d_dual"] == "6"


def test_am_verify(capsys):
    code, report = _run_json(capsys, ["am", "--fixture", "golay11dual", "--verify"])
    assert code == 0
    assert report.payload["verification"]["holds"] is True


def test_design_markdown(capsys):
    code = __main__.main(["design", "--fixture", "golay12", "--weight", "6", "--t", "5"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("# design")
    assert "- is_design: yes" in out
    assert "- lambda: 2" in out


def test_diophantine_scan(capsys):
    code, report = _run_json(capsys, ["diophantine", "--q", "3", "--ell", "2", "--nmax", "10000"])
    assert code == 0
    pairs = [(s["n"], s["k"]) for s in report.payload["solutions"]]
    assert pairs == [("1", "1"), ("2", "2"), ("11", "5")]


def test_analyze_dual_golay(capsys):
    code, report = _run_json(capsys, ["analyze", "--fixture", "golay11dual"])
    assert code == 0
    payload = report.payload
    assert (payload["d"], payload["d_dual"]) == ("6", "5")
    assert payload["strength"]["C"]["delta"] == "4"
    assert payload["strength"]["C"]["s"] == "7"
    assert payload["delta_below_s"]["C"] is True
    assert payload["self_orthogonal"] is False


def test_analyze_respects_t_max(capsys):
    code, report = _run_json(capsys, ["analyze", "--fixture", "golay12", "--t-max", "5"])
    assert code == 0
    assert report.payload["strength"]["C"]["s"] == "5"
    assert report.payload["self_orthogonal"] is True


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["theorem", "--fixture", "golay12", "--id", "1.3"], "theorem"),
        (["criterion", "--fixture", "golay11dual"], "criterion"),
        (["identity", "--fixture", "golay11"], "identity"),
        (["relations"], "relations"),
        (["harmonic", "--fixture", "golay11dual", "--k", "2", "--weight", "6", "--t", "3"], "harmonic"),
    ],
)
def test_reports_succeed(capsys, argv, kind):
    code, report = _run_json(capsys, argv)
    assert code == 0
    assert report.kind == kind


@pytest.mark.parametrize(
    "fixture, theorem_id",
    [("golay11dual", "1.1"), ("golay12", "1.3"), ("golay11dual", "two-weight")],
)
def test_theorem_accepts_numeric_ids_and_aliases(capsys, fixture, theorem_id):
    code, report = _run_json(capsys, ["theorem", "--fixture", fixture, "--id", theorem_id])
    assert code == 0
    verdict = report.payload["verdict"]
    assert verdict["theorem"] in ("1.1", "1.3")
    assert verdict["consistent"] is True
    assert verdict["branch"] == "(1)"


def test_identity_without_applicable_identity(capsys):
    _, report = _run_json(capsys, ["identity", "--fixture", "golay11"])
    assert report.payload["identity"] is None
    assert report.payload["conjecture"]["applicable"] is False


def test_harmonic_design_check_agrees(capsys):
    _, report = _run_json(
        capsys, ["harmonic", "--fixture", "golay11dual", "--k", "2", "--weight", "6", "--t", "3"]
    )
    assert report.payload["dimension"] == "44"
    assert report.payload["design_check"] == {"weight": "6", "t": "3", "harmonic": True, "counting": True}
    assert report.payload["proportionality"]["proportional"] is True


def test_fixtures_output_reparses(capsys):
    assert __main__.main(["fixtures", "--fixture", "golay11"]) == 0
    code = parse_code_file(capsys.readouterr().out)
    assert weight_distribution(code).counts == {0: 1, 5: 132, 6: 132, 8: 330, 9: 110, 11: 24}


def test_fixtures_export(tmp_path, capsys):
    assert __main__.main(["fixtures", "--export", str(tmp_path)]) == 0
    assert sorted(path.name for path in tmp_path.iterdir()) == [
        "golay11.code",
        "golay11dual.code",
        "golay12.code",
    ]
    assert capsys.readouterr().out.count("3 11 ") == 2


def test_code_file_input(tmp_path, capsys):
    path = tmp_path / "rep.code"
    path.write_text("3 4 1\n1111\n", encoding="utf-8")
    code, report = _run_json(capsys, ["am", "--code", str(path)])
    assert code == 0
    assert report.payload["code"] == "rep"
    assert report.payload["am"]["t"] is None


@pytest.mark.parametrize(
    "argv",
    [
        ["am"],
        ["am", "--code", "missing.code"],
        ["am", "--fixture", "golay12", "--budget", "10"],
        ["theorem", "--fixture", "golay11", "--id", "1.1"],
        ["criterion", "--fixture", "golay11", "--workers", "0"],
        ["design", "--fixture", "golay11dual", "--weight", "7", "--t", "2"],
        ["diophantine", "--q", "6", "--ell", "2", "--nmax", "10"],
    ],
)
def test_precondition_errors_exit_two(argv, capsys):
    assert __main__.main(argv) == 2
    assert capsys.readouterr().out == ""


def test_bad_code_file_exit_two(tmp_path, caplog):
    path = tmp_path / "bad.code"
    path.write_text("3 4 1\n1131\n", encoding="utf-8")
    assert __main__.main(["am", "--code", str(path)]) == 2
    assert any("line 2, column 3" in record.getMessage() for record in caplog.records)


def test_theorem_inconsistency_exits_three(monkeypatch, capsys):
    verdict = TheoremVerdict("1.3", True, None, False, {"t": "5"})
    monkeypatch.setattr(__main__, "verify_theorem_instance", lambda *args, **kwargs: verdict)
    assert __main__.main(["theorem", "--fixture", "golay12", "--id", "1.3", "--json"]) == 3
    payload = json.loads(capsys.readouterr().out)["payload"]
    assert payload["verdict"]["consistent"] is False


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        __main__.main([])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        __main__.main(["theorem", "--fixture", "golay12", "--id", "9.9"])
