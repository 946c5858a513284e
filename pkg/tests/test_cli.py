import csv
import io
import json
import subprocess
import sys

import pytest

from fineforms.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def envelope(*argv):
    code, text = call(*argv)
    env = json.loads(text)
    assert set(env) == {"schema_version", "command", "params", "data", "status"}
    assert env["schema_version"] == "1"
    return code, env


def test_expand():
    code, env = envelope("expand", "--p", "3", "--r", "1", "--n-max", "4")
    assert code == 0 and env["status"] == "ok"
    assert env["data"]["coefficients"] == [1, 1, 2, 0, 2]
    assert env["params"] == {"p": 3, "r": 1, "n_max": 4, "squared": False}


def test_expand_squared():
    _, env = envelope("expand", "--p", "3", "--r", "1", "--n-max", "5", "--squared")
    assert env["data"]["coefficients"] == [0, 1, 2, 5, 4, 8]


def test_verify_thm1_ok():
    code, env = envelope("verify", "--identity", "thm1", "--p", "3", "--r", "1", "--n-max", "500")
    assert code == 0 and env["status"] == "ok"
    assert env["data"]["status"] == "pass" and env["data"]["checked_count"] == 501


def test_verify_gcd_violation_exits_2():
    code, env = envelope("verify", "--identity", "fine1", "--p", "4", "--r", "2", "--n-max", "10")
    assert code == 2 and env["status"] == "error"


def test_verify_andrews_needs_no_params():
    code, env = envelope("verify", "--identity", "andrews", "--n-max", "10")
    assert code == 0 and env["data"]["notes"]["trusted_half_width"] == 12


def test_verify_missing_params():
    code, env = envelope("verify", "--identity", "thm2", "--n-max", "10")
    assert code == 2


def test_divisor_seq_agrees_with_expand():
    _, a = envelope("expand", "--p", "7", "--r", "3", "--n-max", "80")
    _, b = envelope("divisor-seq", "--p", "7", "--r", "3", "--n-max", "80", "--identity", "fine1")
    assert a["data"]["coefficients"] == b["data"]["coefficients"]


def test_divisor_seq_fine2_agrees_with_squared_expand():
    _, a = envelope("expand", "--p", "5", "--r", "2", "--n-max", "60", "--squared")
    _, b = envelope("divisor-seq", "--p", "5", "--r", "2", "--n-max", "60", "--identity", "fine2")
    assert b["data"]["start"] == 1
    assert a["data"]["coefficients"][1:] == b["data"]["coefficients"]


def test_represent():
    _, env = envelope("represent", "--p", "3", "--r", "1", "--n", "3")
    assert env["data"]["representations"] == [
        {"k": 1, "l": 0, "sign": -1},
        {"k": 3, "l": -3, "sign": 1},
    ]
    assert (env["data"]["even"], env["data"]["odd"]) == (1, 1)


def test_classify_json_and_csv():
    _, env = envelope("classify", "--p", "3", "--r", "1", "--n-max", "4")
    assert [row["verdict"] for row in env["data"]] == [
        "positive", "positive", "positive", "balanced", "positive"
    ]
    code, text = call("classify", "--p", "3", "--r", "1", "--n-max", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert rows[0] == ["n", "even", "odd", "excess", "verdict"]
    assert len(rows) == 6 and rows[4] == ["3", "1", "1", "0", "balanced"]


def test_format_env_default(monkeypatch):
    monkeypatch.setenv("FINEFORMS_FORMAT", "csv")
    _, text = call("classify", "--p", "3", "--r", "1", "--n-max", "2")
    assert text.startswith("n,even,odd")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["expand", "--p", "3", "--r", "1"],
        ["expand", "--p", "3", "--r", "x", "--n-max", "4"],
        ["expand", "--p", "3", "--r", "3", "--n-max", "4"],
        ["expand", "--p", "3", "--r", "1", "--n-max", "1000001"],
        ["classify", "--p", "3", "--r", "2", "--n-max", "4"],
        ["sweep", "--p-max", "1", "--n-max", "5"],
        ["-p", "3"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, env = envelope(*argv)
    assert code == 2 and env["status"] == "error"


def test_internal_breach_exits_3(monkeypatch):
    import fineforms.cli as cli
    from fineforms.params import InvariantError

    def boom(*_):
        raise InvariantError("divisibility")

    monkeypatch.setattr(cli.dv, "fine2_sequence", boom)
    code, env = envelope("divisor-seq", "--p", "3", "--r", "1", "--n-max", "5", "--identity", "fine2")
    assert code == 3 and env["status"] == "error"


def test_failed_verification_exits_1(monkeypatch):
    import fineforms.verifier as vf

    monkeypatch.setattr(vf.dv, "fine1_coefficient", lambda P, n: 7)
    code, env = envelope("verify", "--identity", "fine1", "--p", "3", "--r", "1", "--n-max", "5")
    assert code == 1 and env["status"] == "fail"
    assert env["data"]["first_failure"]["n"] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fineforms", "expand", "--p", "3", "--r", "1", "--n-max", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["data"]["coefficients"] == [1, 1, 2, 0, 2]
    bad = subprocess.run(
        [sys.executable, "-m", "fineforms", "verify", "--identity", "fine1",
         "--p", "4", "--r", "2", "--n-max", "10"],
        capture_output=True, text=True,
    )
    assert bad.returncode == 2 and "gcd" in bad.stderr
