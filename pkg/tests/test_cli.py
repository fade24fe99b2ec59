import json
import subprocess
import sys

import pytest

from phm.bundle import dumps
from phm.cli import main

from conftest import built


@pytest.fixture
def bundle(tmp_path):
    def write(name, text=None):
        path = tmp_path / f"{name}.json"
        path.write_text(text if text is not None else dumps(built(name)))
        return str(path)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, [json.loads(line) for line in out.splitlines()], err


def test_validate_f1(bundle, capsys):
    code, lines, err = run(["validate", bundle("F1")], capsys)
    assert code == 0
    assert lines and all(r["status"] == "pass" for r in lines)
    assert set(lines[0]) == {"structure", "law", "indices", "status", "witness", "kind"}
    assert "0 failed" in err


def test_validate_broken_antipode(bundle, capsys):
    code, lines, err = run(["validate", bundle("wrong-antipode")], capsys)
    assert code == 1
    bad = [r for r in lines if r["status"] == "fail"]
    assert {r["law"] for r in bad} == {"antipode"}
    assert all(r["witness"] for r in bad)
    assert "FAIL" in err


def test_fundamental_f2(bundle, capsys):
    code, lines, err = run(["fundamental", bundle("F2")], capsys)
    assert code == 0
    last = lines[-1]
    assert last["note"] == "hypotheses: not satisfied; isomorphism: verified"
    assert last["certificate"]["inverse_route"] == "matrix-inverse"
    assert "hypotheses: not satisfied; isomorphism: verified" in err


def test_fundamental_f1(bundle, capsys):
    code, lines, _ = run(["fundamental", bundle("F1")], capsys)
    assert code == 0
    assert lines[-1]["note"] == "hypotheses: satisfied; isomorphism: verified"


def test_fundamental_refuses_uncertified_input(bundle, capsys):
    code, lines, err = run(["fundamental", bundle("noncolinear-phi")], capsys)
    assert code == 1
    assert "validation failed" in err
    assert all("certificate" not in r for r in lines)


def test_fundamental_needs_a_module(bundle, capsys):
    code, _, err = run(["fundamental", bundle("leibniz-break")], capsys)
    assert code == 1


def test_coinvariants_f4(bundle, capsys):
    code, lines, err = run(["coinvariants", bundle("F4")], capsys)
    assert code == 0
    dims = {(r["space"], r.get("degree")): r["dim"] for r in lines}
    assert dims["M_coH", "e"] == 4 and dims["B", "g"] == 2
    b = next(r for r in lines if r["space"] == "B" and r["degree"] == "e")
    assert b["basis"] == [["1", "0", "0", "0", "0", "0", "0", "0"], ["0", "0", "0", "1", "0", "0", "0", "0"]]


def test_lemmas_f3(bundle, capsys):
    code, lines, _ = run(["lemmas", bundle("F3")], capsys)
    assert code == 0
    laws = {r["law"] for r in lines}
    assert {"projection.reconstruction", "gamma.after_gamma_prime", "gamma_prime.after_gamma", "lambda.retraction",
            "triangle.induction", "well_defined.lie", "diamond_prime.acoinvariants_equal"} <= laws
    assert all(r["status"] == "pass" or r["kind"] == "flag" for r in lines)


def test_parse_error_exit_code(bundle, capsys):
    doc = json.loads(dumps(built("F1")))
    doc["H"]["counit"]["entries"][0][2] = "1/0"
    code, _, err = run(["validate", bundle("bad", json.dumps(doc))], capsys)
    assert code == 3
    assert "zero denominator" in err


def test_missing_file_is_a_parse_error(tmp_path, capsys):
    code, _, err = run(["validate", str(tmp_path / "nope.json")], capsys)
    assert code == 3


def test_usage_errors(capsys):
    for argv in ([], ["validate"], ["bogus"], ["fixtures"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_unknown_fixture_is_a_usage_error(capsys):
    assert main(["fixtures", "export", "F9"]) == 2
    assert "unknown fixture" in capsys.readouterr().err


def test_export_to_stdout_and_file(tmp_path, capsys):
    assert main(["fixtures", "export", "F2"]) == 0
    out = capsys.readouterr().out
    assert out == dumps(built("F2"))
    path = tmp_path / "f2.json"
    assert main(["fixtures", "export", "F2", "-o", str(path)]) == 0
    assert path.read_text() == out


def test_fixtures_list(capsys):
    assert main(["fixtures", "list"]) == 0
    out = capsys.readouterr().out
    assert "F4" in out and "wrong-antipode" in out


def test_output_is_deterministic(bundle, capsys):
    path = bundle("F4")
    first = (main(["lemmas", path]), capsys.readouterr())
    second = (main(["lemmas", path]), capsys.readouterr())
    assert first == second


def test_module_entry_point(bundle):
    proc = subprocess.run([sys.executable, "-m", "phm.cli", "validate", bundle("F1")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("\n") == len(proc.stdout.splitlines())
