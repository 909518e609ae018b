import io
import json
import subprocess
import sys

import pytest

from qplane.errors import InvariantViolation
from qplane.frontend import cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_qbinom():
    assert run("qbinom", "4", "2") == (0, "1 + q + 2*q^2 + q^3 + q^4\n", "")
    assert run("qbinom", "4", "2", "--q", "2") == (0, "35\n", "")
    assert run("qbinom", "4", "2", "--q", "-1") == (0, "2\n", "")
    code, out, _ = run("qbinom", "4", "2", "--format", "json")
    assert json.loads(out) == {"n": 4, "k": 2, "poly": "1 + q + 2*q^2 + q^3 + q^4", "coeffs": [1, 1, 2, 1, 1]}


def test_qbinom_runs_both_algorithms(monkeypatch):
    calls = []
    real_quotient = cli.q_binomial_quotient
    monkeypatch.setattr(cli, "q_binomial_quotient", lambda n, k: calls.append((n, k)) or real_quotient(n, k))
    assert run("qbinom", "6", "3")[0] == 0
    assert calls == [(6, 3)]


def test_qbinom_disagreement_exits_3(monkeypatch):
    from qplane.coeffring import QPolynomial

    monkeypatch.setattr(cli, "q_binomial_quotient", lambda n, k: QPolynomial([7]))
    code, out, err = run("qbinom", "4", "2")
    assert code == 3 and out == ""
    assert "disagree" in err


def test_invariant_violation_exits_3(monkeypatch):
    def boom(n, k):
        raise InvariantViolation("division left a remainder")

    monkeypatch.setattr(cli, "q_binomial_quotient", boom)
    assert run("qbinom", "4", "2")[0] == 3


def test_qbinom_out_of_range():
    code, out, err = run("qbinom", "2", "5")
    assert code == 2 and out == "" and err


def test_normalize():
    assert run("normalize", "y*x") == (0, "q*x*y\n", "")
    assert run("normalize", "(x+y)^2") == (0, "x^2 + (1 + q)*x*y + y^2\n", "")
    assert run("normalize", "q^2*q*x") == (0, "q^3*x\n", "")
    assert run("normalize", "(x+y)^2", "--q", "1") == (0, "x^2 + 2*x*y + y^2\n", "")
    code, out, _ = run("normalize", "y*x", "--format", "json")
    assert json.loads(out) == {"terms": [{"xexp": 1, "yexp": 1, "num": "q", "den": "1"}]}


def test_normalize_series():
    code, out, _ = run("normalize", "exp_q(x)", "--order", "2")
    assert (code, out) == (0, "(1 / (1 + q))*x^2 + x + 1\n")


def test_expand():
    assert run("expand", "3") == (0, "x^3 + (1 + q + q^2)*x^2*y + (1 + q + q^2)*x*y^2 + y^3\n", "")
    assert run("expand", "0") == (0, "1\n", "")


def test_eval():
    assert run("eval", "exp_q(x)", "--q", "1", "--order", "2") == (0, "1/2*x^2 + x + 1\n", "")
    code, out, _ = run("eval", "exp_q(x)", "--q", "1/2", "--order", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["q"] == "1/2"
    assert doc["terms"][0] == {"xexp": 2, "yexp": 0, "num": "2", "den": "3"}
    assert run("eval", "x - x", "--q", "3") == (0, "0\n", "")


def test_eval_pole():
    code, out, err = run("eval", "exp_q(x)", "--q", "-1", "--order", "2")
    assert code == 2 and out == ""
    assert "pole" in err and "x^2" in err and "1 + q" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("normalize", "x +"),
        ("normalize", "x^20000"),
        ("normalize", "exp_q(x)"),
        ("normalize", "exp_q(1 + x)", "--order", "3"),
        ("normalize", "x / y"),
    ],
)
def test_evaluation_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err.startswith("qplane: error:")


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("frobnicate",),
        ("qbinom", "4"),
        ("qbinom", "-4", "2"),
        ("qbinom", "4", "2", "--q", "abc"),
        ("expand", "20000"),
        ("eval", "x"),
        ("verify",),
        ("verify", "theorem3"),
        ("verify", "theorem1", "--n-max", "5", "--oracle-max", "15"),
        ("verify", "theorem2", "--order", "10001"),
        ("normalize", "x", "--format", "xml"),
    ],
)
def test_usage_errors_exit_1(argv):
    code, out, err = run(*argv)
    assert code == 1 and out == "" and "usage error" in err


def test_oracle_env_override(monkeypatch):
    monkeypatch.setenv("QPLANE_ORACLE_MAX", "4")
    assert run("verify", "theorem1", "--n-max", "6", "--oracle-max", "5")[0] == 1
    assert run("verify", "theorem1", "--n-max", "6", "--oracle-max", "4")[0] == 0


def test_verify_theorem1_report():
    code, out, _ = run("verify", "theorem1", "--n-max", "8", "--oracle-max", "6")
    doc = json.loads(out)
    assert code == 0
    assert doc["theorem"] == "theorem1" and doc["order_or_n"] == 8
    assert doc["status"] == "verified" and doc["failures"] == []
    assert isinstance(doc["elapsed_ms"], (int, float))
    assert [c["oracle"] for c in doc["cases"]] == [n <= 6 for n in range(9)]


def test_verify_theorem2_report():
    code, out, _ = run("verify", "theorem2", "--order", "6")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "verified" and doc["order_or_n"] == 6
    assert run("verify", "theorem2", "--order", "6", "--format", "text") == (0, "theorem2 up to 6: verified\n", "")


def test_verify_failure_exits_3(monkeypatch):
    from qplane.qseries import verify_theorem2

    monkeypatch.setattr(cli, "verify_theorem2", lambda order: verify_theorem2(order, reverse=True))
    code, out, _ = run("verify", "theorem2", "--order", "2")
    assert code == 3
    assert json.loads(out)["status"] == "failed"


@pytest.mark.parametrize(
    "argv",
    [
        ("normalize", "exp_q(x+y)*(y x - 3/2)", "--order", "5"),
        ("qbinom", "12", "5"),
        ("expand", "7", "--format", "json"),
        ("verify", "theorem1", "--n-max", "10", "--oracle-max", "8", "--no-timing"),
        ("verify", "theorem2", "--order", "5", "--no-timing"),
    ],
)
def test_deterministic_output(argv):
    first = run(*argv)
    assert all(run(*argv) == first for _ in range(2))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qplane", "normalize", "y*x"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == b"q*x*y\n"
    proc = subprocess.run(
        [sys.executable, "-m", "qplane", "eval", "exp_q(x)", "--q", "-1", "--order", "2"],
        capture_output=True,
    )
    assert proc.returncode == 2 and proc.stdout == b"" and b"pole" in proc.stderr
