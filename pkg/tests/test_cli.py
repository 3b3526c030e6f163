import io
import json

import pytest

from qrcqe.cli import EXIT_FAIL, EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE, cli_run


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_echoes_normal_form():
    code, out, _ = run("parse", "x ~ y")
    assert code == EXIT_OK and out.strip() == "x <= y & y <= x"


def test_qe_branches():
    assert run("qe", "--branch", "rcvf", "E x. x*x = y")[1].strip() == "0 <= y"
    assert run("qe", "--branch", "acvf", "E x. x*x = y")[1].strip() == "true"
    assert run("qe", "E x. x*x + 1 = 0")[1].strip() == "0 < -1"


def test_qe_structured_record():
    code, out, _ = run("qe", "--format", "structured", "--branch", "rcvf", "E x. x*x = y")
    rec = json.loads(out)
    assert code == EXIT_OK
    assert set(rec) == {"input", "branch", "result", "stats"}
    assert rec["result"] == "0 <= y" and rec["branch"] == "rcvf"
    assert rec["stats"]["quantifiers"] == 1


def test_decide_false_sentence_exits_zero():
    code, out, _ = run("decide", "--branch", "rcvf", "E x. x*x + 1 = 0")
    assert code == EXIT_OK and out.strip() == "false"


def test_decide_guarded_prints_both_branches():
    code, out, _ = run("decide", "E x. x*x + 1 = 0")
    assert code == EXIT_OK and out.splitlines() == ["rcvf: false", "acvf: true"]


def test_decide_completion_flags():
    assert run("decide", "--branch", "acvf", "1+1 ~v 1")[1].strip() == "true"
    assert run("decide", "--branch", "acvf", "--res-char", "2", "1+1 ~v 1")[1].strip() == "false"
    assert run("decide", "--branch", "rcvf", "--char", "2", "1 = 1")[0] == EXIT_USAGE


def test_axioms_listing():
    code, out, _ = run("axioms", "--theory", "qrc", "--odd-bound", "3")
    assert code == EXIT_OK
    assert "A x. 0 <= x -> (E y. y^2 = x)" in out.splitlines()
    assert run("axioms", "--theory", "qrc", "--odd-bound", "2")[0] == EXIT_USAGE


def test_check_axioms_pass():
    code, out, _ = run("check-axioms", "--model", "mr", "--n", "50")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "M_R: 0 violations in 50 samples per axiom"


def test_fuzz_summary_and_seed_override(monkeypatch):
    code, out, _ = run("fuzz", "--fragment", "b", "--cases", "20", "--seed", "4")
    assert code == EXIT_OK and out.strip() == "20/20 agree"
    monkeypatch.setenv("QRC_SEED", "4")
    again = run("fuzz", "--format", "structured", "--fragment", "b", "--cases", "20", "--seed", "99")
    rec = json.loads(again[1])
    assert rec["stats"]["agree"] == 20
    monkeypatch.setenv("QRC_SEED", "four")
    assert run("fuzz", "--fragment", "b", "--cases", "2")[0] == EXIT_USAGE


def test_fuzz_is_deterministic():
    a = run("fuzz", "--format", "structured", "--fragment", "a", "--cases", "15", "--seed", "8")
    b = run("fuzz", "--format", "structured", "--fragment", "a", "--cases", "15", "--seed", "8")
    assert a == b


def test_oracles():
    assert run("oracle", "sturm", "x^2 - 2")[1].strip() == "2"
    assert run("oracle", "sturm", "x^2 - 2", "--g", "x")[1].strip() == "0"
    assert run("oracle", "sturm", "x^2 - t", "--base", "qt")[1].strip() == "2"
    code, out, _ = run("oracle", "polygon", "x^2 - t")
    assert code == EXIT_OK and out.splitlines() == ["slope -1/2 length 2", "zero roots 0"]


@pytest.mark.parametrize("argv, code", [
    (("qe", "E x. x +"), EXIT_USAGE),
    (("qe", "E x. x*x*x = y"), EXIT_UNSUPPORTED),
    (("decide", "x = 1"), EXIT_USAGE),
    (("frobnicate",), EXIT_USAGE),
    (("check-axioms", "--n", "0"), EXIT_USAGE),
    (("qe", "--degree", "3", "E x. x = y"), EXIT_USAGE),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_syntax_error_message_has_position():
    _, _, err = run("parse", "x <== y")
    assert err.startswith("syntax error:") and "column 5" in err


def test_semantic_failure_exit_code(monkeypatch):
    import qrcqe.cli as cli
    from qrcqe.fuzz import FuzzReport

    def failing(cases, seed=1):
        return FuzzReport("a", cases, agree=cases - 1, mismatches=[{"formula": "E x. x = y"}])
    monkeypatch.setitem(cli.FUZZERS, "a", failing)
    code, out, _ = run("fuzz", "--fragment", "a", "--cases", "3")
    assert code == EXIT_FAIL and "mismatch" in out
