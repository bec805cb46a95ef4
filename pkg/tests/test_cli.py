"""CLI surface: exit codes, JSON schema stability, worker determinism."""

import json
import subprocess
import sys

import pytest

from factorlab.graphs import complete, enumerate_graphs, write_graph6


def run(args, inp=None, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "factorlab.cli"] + args,
        capture_output=True,
        text=True,
        input=inp,
        env=full_env,
    )
    return proc.returncode, proc.stdout, proc.stderr


REMARK1_G6 = run(["gen", "remark1", "--k", "0"])[1].strip()
K6_G6 = write_graph6(complete(6))


def test_check_exit_codes_and_witness():
    rc, out, _ = run(["check", REMARK1_G6, "--a", "1", "--b", "1", "--format", "json"])
    assert rc == 1
    obj = json.loads(out)
    assert obj["verdict"] is False
    assert obj["witness"] == {"X": [0, 1, 2], "Y": [3, 4], "theta": 1, "epsilon": 2}

    rc, out, _ = run(["check", "A_", "--a", "1", "--b", "1", "--format", "json"])  # K_2
    assert rc == 0
    assert json.loads(out) == {"verdict": True, "witness": None}

    rc, _, err = run(["check", "notagraph(", "--a", "1", "--b", "1"])
    assert rc == 2 and "factorlab:" in err


def test_check_reads_stdin():
    rc, out, _ = run(["check", "--a", "1", "--b", "1"], inp=K6_G6 + "\n")
    assert rc == 0 and "yes" in out


def test_critical_exit_codes():
    rc, out, _ = run(["critical", REMARK1_G6, "--a", "1", "--b", "1", "--k", "1", "--format", "json"])
    assert rc == 1
    obj = json.loads(out)
    assert obj["witness"]["U"] == [0]
    rc, _, _ = run(["critical", K6_G6, "--a", "1", "--b", "1", "--k", "1"])
    assert rc == 0
    rc, _, _ = run(["critical", K6_G6, "--a", "1", "--b", "1", "--k", "6"])
    assert rc == 2


def test_invariants_json():
    rc, out, _ = run(["invariants", K6_G6, "--format", "json"])
    assert rc == 0
    assert json.loads(out)["invariants"] == {"n": 6, "m": 15, "delta": 5, "kappa": 5, "alpha": 1}
    rc, out, _ = run(["invariants", REMARK1_G6])
    assert rc == 0 and "kappa=3" in out and "alpha=2" in out


def test_bound_modes():
    rc, out, _ = run(["bound", "--a", "1", "--b", "1", "--k", "0", "--alpha", "2"])
    assert rc == 0 and "13/4" in out
    rc, out, _ = run(["bound", "--a", "1", "--b", "1", "--k", "1", "--alpha", "2", "--format", "json"])
    assert json.loads(out) == {"bound": "17/4"}
    rc, out, _ = run(["bound", K6_G6, "--a", "1", "--b", "1", "--format", "json"])
    obj = json.loads(out)
    assert obj == {"bound": "13/4", "kappa": 5, "alpha": 1, "hypothesis_met": True}
    rc, _, _ = run(["bound", "--a", "1", "--b", "1"])
    assert rc == 2  # neither graph nor --alpha
    rc, _, _ = run(["bound", "--a", "0", "--b", "1", "--alpha", "2"])
    assert rc == 2


def test_verify_enumerate_and_stdin():
    rc, out, _ = run(["verify", "--a", "1", "--b", "1", "--k", "0", "--enumerate", "5", "--format", "json"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["graphs_scanned"] == 1 + 2 + 8 + 64 + 1024
    assert obj["conclusion_failures"] == []

    rc, out, _ = run(["verify", "--a", "1", "--b", "1", "--k", "0", "--format", "json"], inp="")
    assert rc == 0 and json.loads(out)["graphs_scanned"] == 0

    rc, _, err = run(["verify", "--a", "1", "--b", "1", "--k", "0"], inp="C~\nbroken(\n")
    assert rc == 2 and "line 2" in err


def test_verify_enumerate_cap():
    rc, _, err = run(["verify", "--a", "1", "--b", "1", "--k", "0", "--enumerate", "8"])
    assert rc == 2 and "cap" in err
    rc, out, _ = run(
        ["verify", "--a", "1", "--b", "1", "--k", "0", "--enumerate", "3", "--format", "json"],
        env={"FACTORLAB_MAX_N": "3"},
    )
    assert rc == 0 and json.loads(out)["graphs_scanned"] == 1 + 2 + 8


def test_check_cap_env():
    rc, _, err = run(["check", K6_G6, "--a", "1", "--b", "1"], env={"FACTORLAB_MAX_N": "5"})
    assert rc == 2 and "cap" in err


def test_verify_worker_determinism():
    lines = []
    for n in range(1, 6):
        lines += [write_graph6(g) for g in enumerate_graphs(n)]
    stream = "\n".join(lines) + "\n"
    outs = []
    for workers in ("1", "3"):
        rc, out, _ = run(
            ["verify", "--a", "1", "--b", "1", "--k", "0", "--format", "json", "--workers", workers],
            inp=stream,
        )
        assert rc == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_remarks_commands():
    rc, out, _ = run(["remarks", "1", "--k", "0"])
    assert rc == 0 and "all assertions hold" in out
    rc, out, _ = run(["remarks", "2", "--a", "1", "--b", "1", "--m", "4", "--k", "0", "--format", "json"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["valid"] is True and obj["kappa"] == 5 and obj["alpha"] == 4
    assert obj["witness"]["theta"] == 1 and obj["witness"]["epsilon"] == 2
    rc, _, err = run(["remarks", "2", "--a", "3", "--b", "2", "--m", "1", "--k", "0"])
    assert rc == 2
    rc, _, err = run(["remarks", "2", "--a", "1", "--b", "2", "--m", "2", "--k", "0"])
    assert rc == 2 and "divisible" in err


def test_gen_roundtrip():
    rc, out, _ = run(["gen", "remark2", "--a", "1", "--b", "2", "--m", "3", "--k", "0"])
    assert rc == 0
    from factorlab.graphs import parse_graph6

    g = parse_graph6(out.strip())
    assert g.n == 5  # K_2 v 3K_1
    rc, out, _ = run(["gen", "complete", "--n", "4"])
    assert out.strip() == "C~"
    rc, _, _ = run(["gen", "remark2", "--a", "2", "--b", "2", "--m", "2", "--k", "0"])
    assert rc == 2


@pytest.mark.parametrize("cmd", [["check"], ["critical"], ["bound"]])
def test_missing_required_flags_exit_two(cmd):
    rc, _, _ = run(cmd + ["C~"])
    assert rc == 2
