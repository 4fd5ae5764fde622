import json

import pytest

from paramodring.config import settings
from paramodring.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from paramodring.paramod.tables import table_path
from paramodring.suites import runner


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_hilbert_command(capsys):
    assert main(["hilbert", "--series", "MGsym", "--kmax", "6"]) == EXIT_OK
    out = _json(capsys)
    assert out["expansion"] == [1, 0, 1, 0, 2, 0, 3]
    assert out["denominators"] == [2, 4, 6]
    assert out["palindromic"] and out["cyclotomic_product"]


def test_lift_command(capsys):
    path = table_path(5, "g6")
    assert main(["lift", "--level", "5", "--jacobi", str(path), "--amax", "1", "--cmax", "1"]) == EXIT_OK
    out = _json(capsys)
    assert out["box"] == [1, 1]
    assert [1, -4, 1, "1"] in out["coeffs"]


@pytest.mark.parametrize("argv", [
    ["lift", "--level", "7", "--jacobi", "LEVEL5", "--amax", "1", "--cmax", "1"],
    ["lift", "--level", "5", "--jacobi", "LEVEL5", "--amax", "1", "--cmax", "3"],
    ["lift", "--level", "5", "--jacobi", "LEVEL5", "--amax", "2", "--cmax", "2"],
    ["lift", "--level", "5", "--jacobi", "no/such/table.jf", "--amax", "1", "--cmax", "1"],
    ["pullback", "--op", "P1", "--jacobi", "LEVEL5"],
    ["pullback", "--op", "P4", "--jacobi", "LEVEL5", "--amax", "1"],
    ["lift", "--level", "5"],
    [],
])
def test_usage_errors(argv):
    argv = [str(table_path(5, "g6")) if a == "LEVEL5" else a for a in argv]
    assert main(argv) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "paramodring" in capsys.readouterr().out


def test_pullback_from_a_lifted_series(tmp_path, capsys):
    series = tmp_path / "F.json"
    path = table_path(5, "g6")
    assert main(["lift", "--level", "5", "--jacobi", str(path), "--amax", "1", "--cmax", "1",
                 "--out", str(series)]) == EXIT_OK
    assert main(["pullback", "--op", "P1", "--series", str(series), "--taylor", "6"]) == EXIT_OK
    assert _json(capsys)["kind"] == "biexp"
    assert main(["pullback", "--op", "P5", "--jacobi", str(path)]) == EXIT_OK
    assert _json(capsys)["kind"] == "quadpair"


def test_eisenstein_command(tmp_path, capsys):
    assert main(["eisenstein", "--weight", "4", "--level", "1", "--max-n", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ["weight 4", "index 1"]
    assert lines[4:] == ["0 0 1", "1 0 126", "1 1 56", "1 2 1"]
    out = tmp_path / "e45.jf"
    assert main(["eisenstein", "--weight", "4", "--level", "5", "--max-n", "1", "--out", str(out)]) == EXIT_OK
    assert out.read_text().startswith("weight 4\nindex 5\n")
    assert main(["eisenstein", "--weight", "5", "--level", "5", "--max-n", "1"]) == EXIT_USAGE


def test_relations_command(capsys):
    assert main(["relations", "--preset", "gamma2", "--weight-max", "4"]) == EXIT_OK
    out = _json(capsys)
    assert out["generators"] == ["e1", "e2"]
    by_weight = {w["weight"]: w for w in out["weights"]}
    assert by_weight[4]["rank"] == 3 and by_weight[4]["relations"] == []
    assert by_weight[3]["monomials"] == 0


def test_verify_table_and_json(capsys):
    assert main(["verify", "--suite", "hilbert"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("== hilbert ==")
    assert main(["verify", "--suite", "hilbert", "--json"]) == EXIT_OK
    out = _json(capsys)
    assert out[0]["suite"] == "hilbert" and out[0]["failed"] == 0


def test_verify_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setitem(runner._SUITE_CHECKS, "hilbert", [("broken", lambda: (False, "w"))])
    assert main(["verify", "--suite", "hilbert"]) == EXIT_FAILED
    assert "broken  FAIL" in capsys.readouterr().out


def test_verify_needs_data_dir(monkeypatch, tmp_path):
    monkeypatch.setattr(settings, "paramod_data", str(tmp_path / "missing"))
    assert main(["verify", "--suite", "paramod"]) == EXIT_USAGE


def test_history(run_db, capsys):
    assert main(["verify", "--suite", "hilbert", "--record"]) == EXIT_OK
    capsys.readouterr()
    assert main(["history", "--limit", "5"]) == EXIT_OK
    runs = _json(capsys)
    assert len(runs) == 1
    assert runs[0]["suite"] == "hilbert" and runs[0]["status"] == "pass"


def test_repeated_commands_are_byte_identical(tmp_path, capsys):
    path = str(table_path(5, "g6"))
    outputs = []
    for run in ("first", "second"):
        out = tmp_path / f"{run}.json"
        assert main(["lift", "--level", "5", "--jacobi", path, "--amax", "2", "--cmax", "1",
                     "--out", str(out)]) == EXIT_OK
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]

    printed = []
    for _ in range(2):
        assert main(["pullback", "--op", "P4", "--jacobi", path]) == EXIT_OK
        printed.append(capsys.readouterr().out)
    assert printed[0] == printed[1]
    assert json.loads(printed[0])["kind"] == "biexp"


def test_lift_beyond_table_names_the_missing_rows(caplog):
    path = str(table_path(5, "g6"))
    assert main(["lift", "--level", "5", "--jacobi", path, "--amax", "2", "--cmax", "2"]) == EXIT_USAGE
    assert any("(4," in m for m in caplog.messages)
