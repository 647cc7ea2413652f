import json
import shutil
import subprocess

import pytest

from krlogic.cli import main

from conftest import FIXTURES

FF = str(FIXTURES / "automata" / "flipflop.json")
SR = str(FIXTURES / "automata" / "sr_latch.json")


@pytest.fixture
def since_program(tmp_path):
    path = tmp_path / "prog.krl"
    path.write_text("q1, q2 :- S(a, b).\nh :- q2.\n")
    return str(path)


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_eval(capsys):
    assert call(capsys, "eval", "--formula", "O a", "--trace", "{};{a}") == (0, "true", "")
    assert call(capsys, "eval", "--formula", "a S b", "--trace", "{b};{a}", "--at", "1")[1] == "true"
    assert call(capsys, "eval", "--formula", "Y a", "--trace", "{a};{}", "--all")[1] == "false true"


def test_eval_json(capsys):
    code, out, _ = call(capsys, "--json", "eval", "--formula", "H a", "--trace", "{a};{}")
    data = json.loads(out)
    assert code == 0 and data["schema_version"] == 1 and data["value"] is False


def test_syntax_error_exit_code(capsys):
    code, _, err = call(capsys, "eval", "--formula", "a S", "--trace", "{a}")
    assert code == 2 and err.startswith("krlc: ")


def test_eval_program(capsys, since_program):
    code, out, _ = call(capsys, "eval-program", "--program", since_program,
                        "--trace", "{b};{a}", "--var", "h")
    assert (code, out) == (0, "true")


def test_run(capsys):
    code, out, _ = call(capsys, "run", "--automaton", FF, "--input", "set,read,reset")
    assert code == 0
    assert out.splitlines()[0].split()[1:] == ["low", "high", "high", "low"]


def test_run_cascade(capsys, since_program, tmp_path):
    target = tmp_path / "c.json"
    assert call(capsys, "compile", "--program", since_program, "--to", "cascade",
                "-o", str(target))[0] == 0
    code, out, _ = call(capsys, "--json", "run-cascade", "--cascade", str(target),
                        "--trace", "{b};{a};{}", "--vars", "a,b")
    assert code == 0 and json.loads(out)["outputs"] == ["1", "1", "0"]


def test_compile_formula(capsys):
    code, out, _ = call(capsys, "--json", "compile", "--formula", "a S b", "--to", "program")
    data = json.loads(out)
    assert code == 0 and data["rules"] == 1 and ":- S(a, b)" in data["program"]


def test_compile_automaton(capsys):
    code, out, _ = call(capsys, "compile", "--automaton", SR, "--to", "program")
    assert code == 0 and "out :-" in out


def test_unfold(capsys, since_program):
    assert call(capsys, "unfold", "--program", since_program, "--var", "h")[:2] == (0, "a S b")


def test_normalize(capsys, tmp_path):
    good = tmp_path / "n.krl"
    good.write_text("h :- Y p.\np :- a & b.\n")
    bad = tmp_path / "m.krl"
    bad.write_text("h :- Y p.\np :- Y a.\n")
    assert call(capsys, "normalize", "--program", str(good))[0] == 0
    code, out, _ = call(capsys, "normalize", "--program", str(bad))
    assert code == 1 and "normal: no" in out


def test_algebra(capsys):
    code, out, _ = call(capsys, "algebra", "--automaton", FF)
    assert code == 0 and out.splitlines()[0] == "flip-flop monoid, 3 elements"
    assert call(capsys, "algebra", "--similar", "S", "F")[:2] == (0, "similar")
    assert call(capsys, "algebra", "--similar", "P", "S")[:2] == (1, "not similar")
    assert call(capsys, "algebra", "--prime", "Cs4")[0] == 1


def test_equiv(capsys, since_program):
    assert call(capsys, "equiv", "--left", "a S b", "--right", f"{since_program}:h",
                "--maxlen", "5")[0] == 0
    code, out, _ = call(capsys, "equiv", "--left", "O a", "--right", "H a", "--maxlen", "2")
    assert code == 1 and "{};{a}" in out.replace(" ", "")


def test_equiv_automaton_against_formula(capsys):
    # high before the update: set on s, reset on r without s
    assert call(capsys, "equiv", "--left", SR, "--right", "Y ((s | !r) S s)",
                "--maxlen", "5", "--vars", "s,r")[0] == 0
    assert call(capsys, "equiv", "--left", SR, "--right", "(s | !r) S s",
                "--maxlen", "5", "--vars", "s,r")[0] == 1
    assert call(capsys, "equiv", "--left", SR, "--right", SR, "--maxlen", "4")[0] == 0


def test_operators(capsys):
    code, out, _ = call(capsys, "operators")
    assert code == 0 and {"F", "S", "P"} <= set(out.split())
    code, out, _ = call(capsys, "--counter-convention", "intent", "operators", "--show", "C3")
    assert code == 0 and json.loads(out)["states"] == 3


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("KRLC_BUDGET", "5")
    code, _, err = call(capsys, "equiv", "--left", "a", "--right", "a", "--maxlen", "3")
    assert code == 2 and "budget" in err


def test_usage_error(capsys):
    assert call(capsys, "compile", "--to", "program")[0] == 2
    assert call(capsys, "no-such-command")[0] == 2


@pytest.mark.skipif(shutil.which("krlc") is None, reason="entry point not installed")
def test_entry_point():
    done = subprocess.run(["krlc", "eval", "--formula", "a", "--trace", "{a}"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "true"
