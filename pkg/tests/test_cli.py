import json
import random
import subprocess
import sys

import pytest

from bisetcover.biset import CandidateEdge
from bisetcover.cli import main
from bisetcover.instances import (
    InstanceFile,
    InstanceFormatError,
    dumps_result,
    loads_instance,
    loads_result,
    random_enca,
    random_koca,
    solve_instance,
)

EXAMPLE_A = {
    "problem": "koca", "n": 3, "k": 2, "root": 0,
    "base_edges": [[0, 1], [0, 2]],
    "candidates": [{"u": 1, "v": 2, "cost": 1}, {"u": 0, "v": 1, "cost": 2}, {"u": 0, "v": 2, "cost": 2}],
}
EXAMPLE_B = {
    "problem": "enca", "n": 3, "k": 2, "Q": [1],
    "base_edges": [[0, 1], [1, 2]],
    "candidates": [{"u": 0, "v": 2, "cost": 1}, {"u": 1, "v": 2, "cost": 1}],
}


@pytest.fixture
def write(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
        return str(path)

    return _write


def test_solve_example_a(write, tmp_path):
    out = tmp_path / "a.out.json"
    assert main(["solve", "--in", write("a.json", EXAMPLE_A), "--out", str(out)]) == 0
    result = json.loads(out.read_text())
    assert result["status"] == "optimal" and result["cost"] == 1 and result["edges"] == [0]
    assert set(result) == {"status", "cost", "edges", "cores", "maxflow_calls", "dp_states", "millis"}


def test_solve_malformed(write, capsys):
    assert main(["solve", "--in", write("bad.json", "{not json")]) == 1
    assert "malformed" in capsys.readouterr().err


def test_solve_promise_violation(write, capsys):
    broken = dict(EXAMPLE_A, k=3)
    assert main(["solve", "--in", write("p.json", broken)]) == 1
    assert "promise" in capsys.readouterr().err


def test_solve_missing_file():
    assert main(["solve", "--in", "/nonexistent/x.json"]) == 1


def test_solve_exit_codes(write):
    infeasible = dict(EXAMPLE_A, candidates=[{"u": 0, "v": 1, "cost": 1}])
    assert main(["solve", "--in", write("i.json", infeasible), "--out", "-"]) == 2
    assert main(["solve", "--in", write("a.json", EXAMPLE_A), "--max-size", "0", "--out", "-"]) == 3
    assert main(["solve", "--in", write("q.json", EXAMPLE_A), "--q-limit", "1", "--out", "-"]) == 1


def test_threads_flag_accepted(write):
    assert main(["solve", "--in", write("a.json", EXAMPLE_A), "--threads", "4", "--out", "-"]) == 0


def test_verify(write, tmp_path):
    inst = write("b.json", EXAMPLE_B)
    out = str(tmp_path / "b.out.json")
    assert main(["solve", "--in", inst, "--out", out]) == 0
    assert main(["verify", "--in", inst, "--solution", out]) == 0
    bad = write("bc.json", {"status": "optimal", "cost": 1, "edges": [1]})
    assert main(["verify", "--in", inst, "--solution", bad]) == 2
    unknown = write("u.json", {"status": "optimal", "cost": 1, "edges": [9]})
    assert main(["verify", "--in", inst, "--solution", unknown]) == 1


def test_verify_empty_on_feasible_base(write):
    triangle = {"problem": "enca", "n": 3, "k": 2, "Q": [], "base_edges": [[0, 1], [1, 2], [0, 2]], "candidates": []}
    empty = write("e.json", {"status": "optimal", "cost": 0, "edges": []})
    assert main(["verify", "--in", write("t.json", triangle), "--solution", empty]) == 0


@pytest.mark.parametrize("example", [EXAMPLE_A, EXAMPLE_B])
def test_bruteforce_agrees_with_solve(example, write, tmp_path):
    inst = write("x.json", example)
    s_out, b_out = tmp_path / "s.json", tmp_path / "b.json"
    assert main(["solve", "--in", inst, "--out", str(s_out)]) == 0
    assert main(["bruteforce", "--in", inst, "--out", str(b_out)]) == 0
    s_res, b_res = json.loads(s_out.read_text()), json.loads(b_out.read_text())
    assert (s_res["status"], s_res["cost"]) == (b_res["status"], b_res["cost"])


def test_bruteforce_guard_rail(write):
    big = dict(EXAMPLE_A, candidates=[{"u": 1, "v": 2, "cost": 1}] * 21)
    assert main(["bruteforce", "--in", write("big.json", big), "--max-size", "2"]) == 1


def test_bruteforce_parameter(write):
    assert main(["bruteforce", "--in", write("a.json", EXAMPLE_A), "--max-size", "0", "--out", "-"]) == 3


def test_gen_is_deterministic(tmp_path):
    for problem in ("koca", "enca"):
        paths = [tmp_path / f"{problem}{i}.json" for i in range(2)]
        for p in paths:
            args = ["gen", "--problem", problem, "--n", "6", "--k", "2", "--edges", "5", "--seed", "11"]
            assert main(args + ["--out", str(p)]) == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()
        inst = loads_instance(paths[0].read_text())
        inst.koca() if problem == "koca" else inst.enca()  # promise holds
        assert len(inst.candidates) == 5


def test_export_dot(write, tmp_path):
    out = tmp_path / "h.dot"
    assert main(["export-dot", "--in", write("a.json", EXAMPLE_A), "--out", str(out)]) == 0
    dot = out.read_text()
    assert "shape=diamond" in dot and dot.count(" -- ") == 10
    assert main(["export-dot", "--in", write("b.json", EXAMPLE_B), "--out", str(out)]) == 0
    assert out.read_text().count(" -- ") == 4


def test_no_timing_zeroes_millis(write, tmp_path):
    out = tmp_path / "r.json"
    main(["solve", "--in", write("a.json", EXAMPLE_A), "--out", str(out), "--no-timing"])
    assert json.loads(out.read_text())["millis"] == 0


@pytest.mark.parametrize("seed", range(10))
def test_instance_round_trip(seed):
    rng = random.Random(seed)
    gen = random_koca if seed % 2 else random_enca
    inst = gen(rng, 5, 2, 4)
    inst.p = seed
    assert loads_instance(inst.dumps()) == inst


def test_result_round_trip():
    inst = InstanceFile("koca", 3, 2, [(0, 1), (0, 2)], [CandidateEdge(1, 2, 1, 0)], root=0)
    sol = solve_instance(inst)
    sol.graph = None
    assert loads_result(dumps_result(sol)) == sol


@pytest.mark.parametrize(
    "patch",
    [
        {"problem": "cactus"},
        {"n": 0},
        {"k": "2"},
        {"base_edges": [[0, 0]]},
        {"base_edges": [[0, 3]]},
        {"candidates": [{"u": 1, "v": 2, "cost": -1}]},
        {"candidates": [{"u": 1, "v": 1, "cost": 1}]},
        {"root": 7},
        {"p": -1},
    ],
)
def test_format_errors(patch):
    with pytest.raises(InstanceFormatError):
        loads_instance(json.dumps(dict(EXAMPLE_A, **patch)))


def test_module_entry_point(write):
    proc = subprocess.run(
        [sys.executable, "-m", "bisetcover", "solve", "--in", write("a.json", EXAMPLE_A)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["cost"] == 1
