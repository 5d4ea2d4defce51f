"""End-to-end runs of the installed console entry point.

Every test shells out to a fresh interpreter, so these double as an
install smoke test and as the contract for scripting against the tool.
"""

import json
import subprocess
import sys

import pytest


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "signedspread", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=300,
    )


def out_json(proc):
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.endswith("\n")
    return json.loads(proc.stdout)


def test_version_and_help():
    assert run_cli("--version").returncode == 0
    assert "signedspread" in run_cli("--version").stdout
    assert run_cli("--help").returncode == 0
    assert run_cli().returncode == 2  # no subcommand


def test_generate_emits_graph_json(tmp_path):
    payload = out_json(run_cli("generate", "gn", "6"))
    assert payload["schema"] == 1 and payload["n"] == 6
    target = tmp_path / "g.json"
    proc = run_cli("generate", "gn", "6", "-o", str(target))
    assert proc.returncode == 0 and proc.stdout == ""
    assert json.loads(target.read_text()) == payload


def test_generate_validation_exit_codes():
    assert run_cli("generate", "gn").returncode == 2  # missing size
    assert run_cli("generate", "gn", "6", "4").returncode == 2  # extra size
    assert run_cli("generate", "gn", "7").returncode == 1  # odd order
    assert run_cli("generate", "tree", "5").returncode == 2  # seed required
    assert run_cli("generate", "torus", "4").returncode == 2  # unknown kind
    both = run_cli("generate", "cycle", "5", "--signs", "1,1,1,1,1", "--all-negative")
    assert both.returncode == 2


def test_pipe_generate_into_solve():
    graph = run_cli("generate", "gn", "6").stdout
    payload = out_json(run_cli("solve", "--exact", stdin=graph))
    assert payload["optimum"] == 1 and payload["optimal"] is True
    relaxed = out_json(run_cli("solve", "--exact", "--relaxed", stdin=graph))
    assert relaxed["optimum"] <= payload["optimum"]


def test_simulate_reports_confusion():
    graph = run_cli("generate", "cycle", "5", "--all-negative").stdout
    payload = out_json(
        run_cli("simulate", "--place", "0:A", "--place", "2:A", stdin=graph)
    )
    assert payload["confused"] == [3] and payload["complete"] is True
    bad = run_cli("simulate", "--place", "0:B", stdin=graph)
    assert bad.returncode == 2
    neg = run_cli("simulate", "--place", "0:-A", stdin=graph)
    assert neg.returncode == 1  # -A needs --relaxed
    ok = out_json(run_cli("simulate", "--relaxed", "--place", "0:-A", stdin=graph))
    assert ok["mode"] == "rID"


def test_solve_flag_conflicts_and_empty_stdin():
    graph = run_cli("generate", "path", "4").stdout
    assert run_cli("solve", "--exact", stdin="").returncode == 2
    assert run_cli("solve", "--greedy", "tree_frontier", "--relaxed", stdin=graph).returncode == 2
    assert run_cli("solve", "--greedy", "tree_frontier", "--min-steps", stdin=graph).returncode == 2
    assert run_cli("solve", "--exact", "--via-class", stdin=graph).returncode == 2


def test_solve_greedy_and_min_steps():
    graph = run_cli("generate", "path", "6").stdout
    greedy = out_json(run_cli("solve", "--greedy", "tree_frontier", stdin=graph))
    assert greedy["optimal"] is False and greedy["optimum"] == 0
    assert greedy["policy"] == "tree_frontier" and greedy["bound"] == 0.0
    steps = out_json(run_cli("solve", "--exact", "--min-steps", stdin=graph))
    assert steps["optimum"] == 2


def test_solve_capacity_exit():
    graph = run_cli("generate", "path", "9").stdout
    assert run_cli("solve", "--exact", "--max-n", "8", stdin=graph).returncode == 1
    assert run_cli("solve", "--exact", stdin=graph).returncode == 0


def test_balance_frustration_switch_equivalent(tmp_path):
    graph = run_cli("generate", "gn", "6").stdout
    bal = out_json(run_cli("balance", stdin=graph))
    assert bal["balanced"] is True
    assert sorted(map(sorted, bal["partition"])) == [[0, 1, 2], [3, 4, 5]]
    assert bal["antibalanced"] is False

    ktt = run_cli("generate", "ktt", "3").stdout
    fr = out_json(run_cli("frustration", "--realize", stdin=ktt))
    assert fr["frustration"] == 2
    assert fr["witness"] == [[0, 4], [1, 3]]
    realized = fr["realized"]
    assert sum(1 for e in realized["edges"] if e["sign"] == -1) == 2

    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    first.write_text(ktt)
    switched = run_cli("switch", "--at", "0,1,5", stdin=ktt)
    second.write_text(switched.stdout)
    eq = out_json(run_cli("equivalent", str(first), str(second)))
    assert eq["equivalent"] is True and eq["witness"] is not None
    assert run_cli("equivalent", "-", "-").returncode == 2


def test_verify_exit_codes():
    ok = run_cli("verify", "--claim", "c5_allneg", "--claim", "tree_zero")
    assert ok.returncode == 0
    assert "[PASS] c5_allneg" in ok.stdout and "2 passed" in ok.stdout
    red = run_cli("verify", "--claim", "frustration_family", "--json")
    assert red.returncode == 3
    payload = json.loads(red.stdout)
    assert payload["results"][0]["status"] == "fail"
    assert run_cli("verify", "--claim", "nonsense").returncode == 1


def test_explore_conjecture_finds_violations():
    proc = run_cli(
        "explore-conjecture", "conj1",
        "--max-n", "6", "--random", "5", "--random-max-n", "5", "--json",
    )
    assert proc.returncode == 1
    payload = json.loads(proc.stdout)
    assert payload["schema"] == 1 and payload["violations"]
    v = payload["violations"][0]
    assert v["observed"] > v["bound"]
    assert v["graph"]["n"] == v["n"] and "optimum" in v["report"]


def test_dot_output_marks_signs_and_confusion():
    dot = run_cli("generate", "gn", "6", "--format", "dot").stdout
    assert "graph" in dot and "style=dashed" in dot
    graph = run_cli("generate", "cycle", "5", "--all-negative").stdout
    sim = run_cli(
        "simulate", "--place", "0:A", "--place", "2:A", "--format", "dot",
        stdin=graph,
    )
    assert sim.returncode == 0
    assert "style=filled" in sim.stdout and '"3:C"' in sim.stdout


@pytest.mark.parametrize("kind,size", [("ktt", ["3"]), ("gst", ["4", "3"]),
                                       ("cycle", ["5"]), ("path", ["4"])])
def test_generate_kinds_roundtrip(kind, size):
    payload = out_json(run_cli("generate", kind, *size))
    assert payload["n"] >= int(size[0])
    seeded = out_json(run_cli("generate", "random", "5", "--seed", "3"))
    assert seeded == out_json(run_cli("generate", "random", "5", "--seed", "3"))
