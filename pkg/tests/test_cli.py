"""Command-line front end: dispatch, formats, exit codes and the manifest."""

import io
import json
import subprocess
import sys

import pytest

from artifact import lattice
from artifact.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_walls_find_table_has_eight_rows():
    code, out, _ = call("walls", "find", "--table")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split()[:2] == ["k", "t_k"]
    rows = lines[2:]
    assert [r.split()[0] for r in rows] == [str(k) for k in range(8)]
    assert "E14" in rows[5] and "A4" in rows[5]


def test_walls_find_json_schema():
    code, out, _ = call("walls", "find", "--json", "--delta", "1/8")
    data = json.loads(out)
    assert code == 0
    assert set(data) >= {"delta", "t_set", "table"}
    assert data["t_set"] == ["1/6", "1/4", "3/10", "1/3", "5/14", "3/8", "2/5"]


def test_census_dot_incidence():
    code, out, _ = call("lattice", "census", "--dot")
    assert code == 0 and out.startswith("graph")
    assert out.count("style=filled") == 2
    assert out.count('label="II(') == 8
    for node in ("II_6", "II_7"):
        assert f'"III_a" -- "{node}"' in out and f'"III_b" -- "{node}"' in out


def test_divisors_walls_deterministic():
    cmd = [sys.executable, "-m", "artifact", "divisors", "walls", "--json"]
    runs = [subprocess.run(cmd, input=b"", capture_output=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1]
    rows = json.loads(runs[0])
    assert len(rows) == 9
    assert rows[4] == {"k": 4, "t": "1/3", "beta": "1/4"}


def test_manifest_goes_to_stderr():
    code, out, err = call("--manifest", "divisors", "walls", "--json")
    assert code == 0
    json.loads(out)
    man = json.loads(err)["manifest"]
    assert man["command"] == "divisors"
    assert set(man) == {"command", "parameters", "artifact_hashes", "truncation",
                        "wall_clock_seconds"}
    assert len(man["artifact_hashes"]["output_sha256"]) == 64


def test_no_manifest_by_default():
    assert call("divisors", "walls", "--json")[2] == ""


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["walls", "find", "--delta", "1/5"], ["walls", "find", "--delta", "abc"],
    ["hm", "mu", "--lambda", "1,0,0,-1"], ["lattice", "census", "--N", "2"],
    ["walls", "find", "--json", "--table"],
])
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_invariant_violation_exit_1(monkeypatch):
    monkeypatch.setitem(lattice.TYPE2_TABLE, 10, 3)
    code, out, err = call("lattice", "census", "--N", "10")
    assert code == 1 and out == ""
    diag = json.loads(err)
    assert diag["error"] == "invariant violation"
    assert diag["details"]["N"] == 10


@pytest.mark.parametrize("argv", [
    ["walls", "certify"], ["walls", "half"], ["walls", "ladder"], ["walls", "ladder", "--dot"],
    ["classify", "--f2", "x0*x2+x1^2", "--f4", "x0*x3^3+x2^2*x3^2", "--at", "smooth-point"],
    ["basin", "weights", "--tag", "5"], ["basin", "check-dimensions"], ["basin", "versal"],
    ["lattice", "chain", "--k", "4"], ["divisors", "verify"],
    ["divisors", "hilbert-slope", "--m", "4..8"],
    ["hm", "mu", "--lambda", "1,0,0,-1", "--f", "x0*x3"],
    ["hm", "hilbert-mu", "--d", "4", "--a", "0", "--m", "5"],
])
def test_commands_succeed(argv):
    code, out, err = call(*argv)
    assert code == 0, err
    assert out.strip()


@pytest.mark.parametrize("argv", [
    ["walls", "certify"], ["basin", "weights", "--tag", "5"], ["divisors", "verify"],
    ["lattice", "chain", "--k", "3"], ["divisors", "hilbert-slope", "--m", "4..6"],
])
def test_json_has_no_floats(argv):
    code, out, _ = call(*argv, "--json")

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    assert code == 0
    walk(json.loads(out))


def test_hilbert_slope_values():
    code, out, _ = call("divisors", "hilbert-slope", "--m", "4..6", "--json")
    assert [r["t"] for r in json.loads(out)] == ["1/10", "1/5", "9/34"]
