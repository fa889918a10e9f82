import json

import pytest

from cbirkhoff.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_singletons_json(capsys):
    code, out, _ = run(capsys, "singletons", "--n", "3", "--c", "132", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 9


def test_heap_json_schema(capsys):
    code, out, _ = run(capsys, "heap", "--n", "3", "--c", "132", "--grid", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"n", "length", "labels", "covers", "coords"}
    assert data["length"] == 6 and len(data["coords"]) == 6


def test_sortword(capsys):
    code, out, _ = run(capsys, "sortword", "--n", "4", "--c", "1234", "--perm", "42351")
    assert code == 0 and out.strip() == "1234|2|1"


def test_relations_sweep(capsys):
    code, out, _ = run(capsys, "relations", "--n", "4", "--sweep", "--format", "json")
    assert code == 0 and all(r["ok"] for r in json.loads(out))


def test_project(capsys):
    code, out, _ = run(capsys, "project", "--n", "7", "--c", "1432657", "--format", "json")
    idx = json.loads(out)["indices"]
    assert idx[0] == [7, 2] and idx[-1] == [1, 2]


def test_umatrix(capsys):
    code, out, _ = run(capsys, "umatrix", "--n", "3")
    assert code == 0 and out.splitlines()[-1] == "1 0 0 1 0 1"


def test_verify_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--sweep", "--format", "json")
    certs = json.loads(out)
    assert code == 0 and len(certs) == 8 and all(c["ok"] for c in certs)
    assert set(certs[0]) >= {"c", "N", "singletons", "volume", "ok"}


def test_verify_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "--n", "3", "--sweep", "--format", "json")
    _, second, _ = run(capsys, "verify", "--n", "3", "--sweep", "--format", "json")
    assert first == second


def test_volume(capsys):
    code, out, _ = run(capsys, "volume", "--n", "4", "--c", "1234", "--format", "json")
    assert json.loads(out) == {"volume": 12}


def test_q81(capsys):
    code, out, _ = run(capsys, "q81", "--n", "4", "--word", "2123243212", "--format", "json")
    data = json.loads(out)
    assert data["verdict"] == "counterexample"
    assert (data["cloud_dimension"], data["heap_dimension"]) == (9, 10)


def test_q81_all_reduced(capsys):
    code, out, _ = run(capsys, "q81", "--n", "3", "--all-reduced", "--format", "json")
    assert code == 0 and json.loads(out) == []


def test_sweep_parallel(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "3", "--parallel", "2", "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_comma_separated_coxeter_word(capsys):
    code, out, _ = run(capsys, "project", "--n", "10", "--c", "1,4,3,2,5,7,6,9,8,10",
                       "--guard", "10", "--format", "json")
    assert code == 0 and len(json.loads(out)["indices"]) == 55


@pytest.mark.parametrize("argv,code", [
    (["nonsense"], 1),
    (["singletons"], 1),
    (["singletons", "--n", "3", "--c", "12"], 1),
    (["sortword", "--n", "3"], 1),
    (["singletons", "--n", "9"], 3),
    (["verify", "--n", "7", "--sweep"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
