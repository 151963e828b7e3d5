import json

import pytest

from arthurlab.cli import main

EXC2 = '{"components":[{"label":"tau1","dim":2,"selfdual":"symplectic","mult":3}]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_verify_so14_single(capsys):
    code, rep = run(capsys, "verify", "so14", "--lambda-grid", "1")
    assert code == 0
    assert len(rep["checks"]) == 1 and rep["checks"][0]["pass"]


def test_empty_grid_exit_two(capsys):
    code, rep = run(capsys, "verify", "so14", "--lambda-grid", "")
    assert code == 2 and "error" in rep


def test_failed_check_exit_one(capsys):
    code, rep = run(capsys, "verify", "so14", "--lambda-grid", "0.3", "--tol", "1e-16")
    assert code == 1 and not rep["pass"]


def test_global_flag_before_subcommand(capsys):
    code, rep = run(capsys, "--tol", "1e-3", "verify", "so14", "--lambda-grid", "1")
    assert rep["checks"][0]["tol"] == 1e-3


def test_param_classify(capsys):
    code, rep = run(capsys, "param", "classify", "--spec", EXC2)
    assert code == 0 and rep["class"] == "exc2" and rep["centralizer"] == "O(3)"


def test_param_bad_json(capsys):
    code, _ = run(capsys, "param", "classify", "--spec", "{not json")
    assert code == 2
    code, _ = run(capsys, "param", "classify", "--spec",
                  '{"components":[{"label":"o","dim":1,"selfdual":"orthogonal","mult":1}]}')
    assert code == 2


def test_kottwitz(capsys):
    assert run(capsys, "kottwitz", "alpha", "--real", "4", "1")[1] == {"form": {"p": 4, "q": 1}, "sign": -1}
    assert run(capsys, "kottwitz", "product", "--signs", "-1,-1,+1")[1] == {"globalizable": True}
    assert run(capsys, "kottwitz", "product", "--signs", "-1")[1] == {"globalizable": False}
    assert run(capsys, "kottwitz", "product", "--signs", "2")[0] == 2


def test_diagram(capsys):
    code, rep = run(capsys, "diagram", "--shape", "so14", "--report", "json")
    assert code == 0
    assert rep["orders"]["N"] == 4 and rep["orders"]["R"] == 1


def test_endoscopy(capsys):
    code, rep = run(capsys, "endoscopy", "list", "--n", "4", "--strict")
    assert len(rep["triples"]) == 5
    code, rep = run(capsys, "endoscopy", "correspond", "--param", EXC2, "--signs", '{"tau1": [2, 1]}')
    assert code == 0 and rep["roundtrip"] and rep["triple"]["group"] == "SO5 x SO3"


def test_weil(capsys):
    code, rep = run(capsys, "weil", "decompose", "--op", "tensor", "--a", '{"two":[{"l":2,"t":0}]}',
                    "--b", '{"two":[{"l":1,"t":0}]}')
    assert rep["dim"] == 4
    code, rep = run(capsys, "weil", "lfactor", "--rep", '{"one":[{"eps":0,"t":0}]}', "--s", "1")
    assert abs(rep["value"][0] - 1.0) <= 1e-12
    code, rep = run(capsys, "weil", "lfactor", "--rep", '{"one":[{"eps":0,"t":0}]}', "--s", "0")
    assert rep["pole"]


def test_verify_so25_and_duplication(capsys):
    code, rep = run(capsys, "verify", "so25", "--lambda-grid", "1")
    assert code == 0
    ids = [c["check"] for c in rep["checks"]]
    assert ids == sorted(ids) and len(ids) == 4
    assert run(capsys, "verify", "gamma-duplication")[0] == 0


def test_json_output_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, rep = run(capsys, "verify", "mc", "--s-grid", "2", "--json", str(path))
    assert code == 0
    assert json.loads(path.read_text()) == rep


def test_deterministic(capsys):
    a = run(capsys, "diagram", "--shape", "so25", "--seed", "5")[1]
    b = run(capsys, "diagram", "--shape", "so25", "--seed", "5")[1]
    assert a == b


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("ARTHURLAB_THREADS", "3")
    code, rep = run(capsys, "verify", "so14", "--lambda-grid", "0.5,1,2")
    assert code == 0 and len(rep["checks"]) == 3
    monkeypatch.setenv("ARTHURLAB_THREADS", "many")
    assert run(capsys, "verify", "so14", "--lambda-grid", "0.5,1")[0] == 2


def test_usage_error(capsys):
    assert main(["nonsense"]) == 2
