import json
import subprocess
import sys

import pytest

from chinoid import cli, core, reps
from chinoid.core import CanonicalForm
from chinoid.diagrams import Diagram
from chinoid.quotients import ProductElement
from chinoid.reps import SparseVector


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "-n", "2", "a1 a2 a1")
    assert code == 0 and out.strip() == "a1 a2 a1"
    data = run_json(capsys, "normalize", "-n", "2", "a2 a1 a1")
    assert CanonicalForm.from_json(data) == core.normalize((2, 1, 1), 2)


def test_normalize_fast_agrees(capsys):
    a = run_json(capsys, "normalize", "-n", "4", "a4 a1 a3 a2 a2 a1")
    b = run_json(capsys, "normalize", "-n", "4", "--fast", "a4 a1 a3 a2 a2 a1")
    assert a == b


def test_rank_inferred_and_checked(capsys):
    assert run_json(capsys, "normalize", "a3 a1")["n"] == 3
    code, _, err = run(capsys, "normalize", "-n", "2", "a3 a1")
    assert code == cli.EXIT_PARSE and "outside" in err


def test_multiply(capsys):
    data = run_json(capsys, "multiply", "-n", "2", "a2", "a1")
    assert CanonicalForm.from_json(data) == core.normalize((2, 1), 2)


def test_class(capsys):
    data = run_json(capsys, "class", "-n", "2", "a1 a2 a1")
    assert sorted(data["class"]) == ["a1 a2 a1", "a2 a1 a1"]
    assert {core.parse_word(w) for w in data["class"]} == core.congruence_class((1, 2, 1), 2)


def test_leaves(capsys):
    data = run_json(capsys, "leaves", "-n", "4")
    assert len(data) == 5
    assert [Diagram.from_json(d).to_json() for d in data] == data
    code, out, _ = run(capsys, "leaves", "-n", "4")
    assert "P3" in out and "( ( ) )" in out


def test_tree(capsys):
    data = run_json(capsys, "tree", "-n", "4")
    assert len(data) == 8 and sum(r["leaf"] for r in data) == 5
    raw = run_json(capsys, "tree", "-n", "4", "--no-prune")
    assert len(raw) == 10
    for row in raw:
        assert Diagram.from_json(row["diagram"]).to_json() == row["diagram"]


def test_kappa(capsys):
    data = run_json(capsys, "kappa", "-n", "2", "--branch", "arc(1,2)", "a2 a1")
    assert data["factors"] == [{"arc": {"p": 0, "q": 0, "g": 1}}]
    assert ProductElement.from_json(data).to_json() == data
    by_prime = run_json(capsys, "kappa", "-n", "4", "--prime", "P3", "a3 a2 a1")
    by_index = run_json(capsys, "kappa", "-n", "4", "--leaf", "3", "a3 a2 a1")
    assert by_prime == by_index


def test_kappa_errors(capsys):
    assert run(capsys, "kappa", "-n", "4", "a1")[0] == cli.EXIT_PARSE
    assert run(capsys, "kappa", "-n", "4", "--branch", "arc(1,3)", "a1")[0] == cli.EXIT_PARSE
    assert run(capsys, "kappa", "-n", "4", "--branch", "arc(2", "a1")[0] == cli.EXIT_PARSE
    assert run(capsys, "kappa", "-n", "4", "--leaf", "7", "a1")[0] == cli.EXIT_PARSE


def test_act(capsys):
    data = run_json(capsys, "act", "-n", "4", "--family", "standard", "--lambda", "2,3",
                    "--word", "a3 a1", "--vector", '{"(2,1)":"1"}')
    assert SparseVector.from_json(data) == SparseVector.basis((3, 1), 2)
    code, out, _ = run(capsys, "act", "-n", "4", "--family", "standard", "--lambda", "2,3",
                       "--word", "a4", "--vector", "(0,0)")
    assert out.strip() == "0"
    data = run_json(capsys, "act", "-n", "4", "--family", "3.2", "--lambda", "3/2",
                    "--mu", "0", "--nu", "5", "--word", "a3 a1", "--vector", "2*(1) + (4)")
    assert data == {"(2)": "15", "(5)": "15/2"}
    data = run_json(capsys, "act", "-n", "6", "--family", "standard", "--lambda", "1,2,3",
                    "--word", "a4 a3", "--vector", "(1,1,1)")
    assert data == {"(1,1,1)": "3"}


def test_act_errors(capsys):
    base = ["act", "-n", "4", "--word", "a1", "--vector", "(0,0)"]
    assert run(capsys, *base, "--family", "standard", "--lambda", "2,0")[0] == cli.EXIT_PARSE
    assert run(capsys, *base, "--family", "3.2", "--lambda", "1", "--mu", "1", "--nu", "1")[0] == cli.EXIT_PARSE
    assert run(capsys, *base, "--family", "nope", "--lambda", "1")[0] == cli.EXIT_PARSE
    assert run(capsys, *base, "--family", "standard", "--lambda", "1,1,1")[0] == cli.EXIT_PARSE
    with pytest.raises(SystemExit) as exc:
        cli.main([*base, "--family", "standard", "--lambda", "x"])
    assert exc.value.code == 2


def test_catalog(capsys):
    data = run_json(capsys, "catalog", "-n", "4")
    assert [f["id"] for f in data["families"]] == ["1-dim", "standard", "1", "2", "3.1", "3.2", "4", "5"]
    assert [p["name"] for p in data["primes"]] == ["P1", "P2", "P3", "P4", "P5"]
    code, out, _ = run(capsys, "catalog", "-n", "3")
    assert code == 0 and "mu != 0" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-n", "3", "--box", "5")
    assert code == 0 and "FAIL" not in out
    data = run_json(capsys, "verify", "-n", "2", "--seed", "7")
    assert data["passed"] and data["seed"] == 7


def test_verify_failure_exit(capsys, monkeypatch):
    from chinoid import verify

    monkeypatch.setattr(verify, "run_suite", lambda n, box, seed: [reps.Report("broken", passed=False)])
    assert run(capsys, "verify", "-n", "3")[0] == cli.EXIT_FAIL


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv(core.BUDGET_ENV, "3")
    code, _, err = run(capsys, "class", "-n", "3", "a3 a2 a1 a3")
    assert code == cli.EXIT_BUDGET and "exceeds" in err


def test_missing_rank(capsys):
    assert run(capsys, "leaves")[0] == cli.EXIT_PARSE


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "chinoid.cli", "leaves", "-n", "3", "--format", "json"],
                         capture_output=True, text=True, check=True)
    assert len(json.loads(out.stdout)) == 3


def test_run_command(capsys):
    assert cli.run(cli.Command("leaves", 3, format="json")) == 0
    assert len(json.loads(capsys.readouterr().out)) == 3
    assert cli.run(cli.Command("normalize", 2, ("a1 a3",))) == cli.EXIT_PARSE
    assert cli.run(cli.Command("bogus")) == cli.EXIT_PARSE
