import io
import json
import subprocess
import sys

import pytest

from topochrom.cli import main
from topochrom.generators import petersen
from topochrom.graph import read_edge_list, write_edge_list


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_kneser(capsys):
    code, out, _ = run(["generate", "--family", "kneser", "--n", "5", "--k", "2"], capsys)
    assert code == 0
    g = read_edge_list(out)
    assert (g.n, g.m) == (10, 15)
    assert out == write_edge_list(petersen())


def test_generate_mycielski_from_spec(capsys):
    code, out, _ = run(["generate", "--family", "mycielski", "--base", "cycle:5", "--r", "2"], capsys)
    g = read_edge_list(out)
    assert code == 0 and (g.n, g.m) == (11, 20)


def test_generate_missing_params(capsys):
    code, _, err = run(["generate", "--family", "kneser", "--n", "5"], capsys)
    assert code == 2 and "--k" in err


def test_generate_bad_params(capsys):
    code, _, err = run(["generate", "--family", "kneser", "--n", "4", "--k", "2"], capsys)
    assert code == 2 and err.startswith("error:")


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bound", "--frobnicate", "x"])
    assert exc.value.code == 2


def test_bound_betti_chromatic(tmp_path, capsys):
    path = tmp_path / "pet.txt"
    path.write_text(write_edge_list(petersen()))
    code, out, _ = run(["bound", str(path)], capsys)
    assert code == 0 and json.loads(out) == {"bipartite_bound": 3, "chromatic": 3, "betti": [1, 11]}
    code, out, _ = run(["betti", str(path)], capsys)
    assert json.loads(out) == [1, 11]
    code, out, _ = run(["chromatic", str(path), "--alpha"], capsys)
    data = json.loads(out)
    assert data["chi"] == 3 and data["alpha"] == 4 and len(data["witness"]) == 10
    code, out, _ = run(["chromatic", str(path), "--total"], capsys)
    assert json.loads(out)["chi"] == 4


def test_betti_reduced_empty(tmp_path, capsys):
    path = tmp_path / "e.txt"
    path.write_text("p 3 0\n")
    code, out, err = run(["betti", str(path), "--reduced"], capsys)
    assert code == 0 and json.loads(out) == [] and "empty" in err


def test_parse_error_has_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p 3 1\ne 0 x\n")
    code, _, err = run(["chromatic", str(path)], capsys)
    assert code == 2 and "line 2" in err


def test_size_cap(tmp_path, capsys):
    path = tmp_path / "big.txt"
    path.write_text("p 11 1\ne 0 1\n")
    code, _, err = run(["betti", str(path)], capsys)
    assert code == 2


def test_construct_verify_pipe(capsys, monkeypatch):
    code, cert, _ = run(["construct-odd", "--n", "25", "--k", "11"], capsys)
    assert code == 0
    code, out, _ = run(["verify", "-"], capsys, stdin=cert, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out) == {"valid": True, "kind": "odd_topological", "t": 5}


def test_construct_is_byte_stable(capsys):
    outs = [run(["construct-odd", "--n", "19", "--k", "7", "--minor"], capsys)[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["kind"] == "odd_minor"


def test_construct_infeasible(capsys):
    code, out, err = run(["construct-odd", "--n", "23", "--k", "10"], capsys)
    assert code == 1 and out == "" and "9 < 10" in err


def test_verify_mutated(tmp_path, capsys):
    _, cert, _ = run(["construct-odd", "--n", "25", "--k", "11"], capsys)
    data = json.loads(cert)
    key = sorted(data["paths"])[0]
    data["paths"][key] = data["paths"][key][:1] + data["paths"][key][2:]
    path = tmp_path / "mut.json"
    path.write_text(json.dumps(data))
    code, out, err = run(["verify", str(path)], capsys)
    assert code == 1 and json.loads(out)["valid"] is False and "path_edge" in err


def test_verify_host_vertex(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(
        json.dumps(
            {
                "host": {"family": "kneser", "params": [5, 2]},
                "kind": "odd_topological",
                "branching": [[1, 2], [3, 9]],
                "paths": {"0,1": [[1, 2], [3, 9]]},
            }
        )
    )
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 1 and err.startswith("host_vertex")


def test_verify_malformed(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text('{"kind": "odd_minor",\n "trees": [')
    code, _, err = run(["verify", str(path)], capsys)
    assert code == 2 and "parse error" in err and "line 2" in err


def test_lift_chain(tmp_path, capsys):
    first = tmp_path / "k3.json"
    code, _, _ = run(["lift", "--start-complete", "2", "--r", "2", "-o", str(first)], capsys)
    assert code == 0
    code, out, _ = run(["verify", str(first)], capsys)
    assert json.loads(out)["t"] == 3
    second = tmp_path / "k4.json"
    code, _, _ = run(["lift", str(first), "--r", "2", "-o", str(second)], capsys)
    code, out, _ = run(["verify", str(second)], capsys)
    assert code == 0 and json.loads(out)["t"] == 4


def test_lift_usage(capsys):
    code, _, err = run(["lift"], capsys)
    assert code == 2


def test_total_check(capsys):
    code, out, _ = run(["total-check", "--max-n", "5"], capsys)
    data = json.loads(out)
    assert code == 0 and data["graphs"] == 1 + 2 + 4 + 11 + 34
    assert data["obstruction_violations"] == 0 and data["total_coloring_violations"] == 0


def test_total_check_parallel_matches(capsys):
    a = run(["total-check", "--max-n", "5"], capsys)[1]
    b = run(["--jobs", "2", "total-check", "--max-n", "5"], capsys)[1]
    assert a == b


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "certificate format 1" in capsys.readouterr().out


def test_console_script_pipe():
    gen = subprocess.run(
        [sys.executable, "-m", "topochrom.cli", "construct-odd", "--n", "19", "--k", "7"], capture_output=True, check=True
    )
    ver = subprocess.run([sys.executable, "-m", "topochrom.cli", "verify", "-"], input=gen.stdout, capture_output=True)
    assert ver.returncode == 0
