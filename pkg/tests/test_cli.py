import json
import subprocess
import sys

import pytest

from drinfeld_modpoly.cli import run


def call(*args):
    return run([str(a) for a in args])


def test_torsion_dump():
    code, out = call("torsion", "--q", 2, "--r", 2, "--P", "T")
    assert code == 0
    assert "degree: 6" in out
    assert "w2 = w2    reduces to 0" in out
    code, out = call("torsion", "--q", 2, "--r", 3, "--P", "T", "--emit", "canonical")
    assert code == 0 and out.splitlines()[0] == "degree: 168"


@pytest.mark.parametrize(
    "argv",
    [
        ["torsion", "--P", "T^2"],
        ["torsion", "--q", "4"],
        ["torsion", "--r", "1"],
        ["modpoly", "--s", "3"],
        ["modpoly", "--s", "one"],
        ["modpoly", "--J", "g1"],
        ["modpoly", "--J", "__import__('os')"],
        ["modpoly", "--r", "3"],
        ["kronecker", "--s", "0"],
        ["torsion", "--P", "T+"],
        ["nonsense"],
    ],
)
def test_bad_input_exits_2(argv):
    code, _ = run(argv)
    assert code == 2


def test_modpoly_outputs():
    code, out = call("modpoly", "--q", 2, "--r", 2, "--P", "T", "--s", 1, "--J", "j", "--emit", "certificate")
    assert code == 0
    assert "degree: 3 (expected 3) ok" in out
    code, out = call("modpoly", "--q", 2, "--r", 3, "--P", "T", "--s", 1, "--J", "J12", "--emit", "json")
    data = json.loads(out)
    assert data["degree"] == 7 and data["invariant"] is True
    code, out = call("modpoly", "--s", 0, "--emit", "canonical")
    assert out == "X + g1^3"
    code, out = call("modpoly", "--s", "full", "--emit", "canonical")
    assert code == 0 and out.startswith("X^5 + ")


def test_canonical_output_is_stable_across_threads():
    base = ["modpoly", "--q", "2", "--r", "3", "--P", "T", "--s", "2", "--J", "J12", "--emit", "canonical"]
    outs = {run(base + ["--threads", str(n)])[1] for n in (1, 2, 4)}
    outs.add(run(base)[1])
    assert len(outs) == 1


def test_kronecker_pass_and_replay(tmp_path):
    code, out = call("kronecker", "--q", 2, "--r", 2, "--P", "T", "--J", "j")
    assert code == 0 and "result: PASS" in out and "residual 0" in out
    for s in (1, 2):
        code, out = call("kronecker", "--q", 2, "--r", 3, "--P", "T", "--s", s, "--J", "J12")
        assert code == 0, out
    code, cert = call("modpoly", "--q", 2, "--r", 3, "--s", 1, "--J", "J12", "--emit", "certificate")
    good = tmp_path / "good.txt"
    good.write_text(cert)
    code, out = call("kronecker", "--q", 2, "--r", 3, "--s", 1, "--J", "J12", "--replay", good)
    assert code == 0
    bad = tmp_path / "bad.txt"
    bad.write_text(cert.replace("Phi(X) = X^7 + ", "Phi(X) = X^7 + X^5 + "))
    code, out = call("kronecker", "--q", 2, "--r", 3, "--s", 1, "--J", "J12", "--replay", bad)
    assert code == 1
    assert "result: FAIL" in out
    assert "residual 0" not in out
    code, _ = call("kronecker", "--replay", tmp_path / "missing.txt")
    assert code == 2


def test_invariants_listing():
    assert call("invariants", "--q", 2, "--r", 3, "--emit", "canonical") == (0, "J07 J12 J41 J70")
    assert call("invariants", "--q", 3, "--r", 2, "--emit", "canonical") == (0, "g1^4")
    code, out = call("invariants", "--q", 2, "--r", 3)
    assert "J12 = g1*g2^2" in out.splitlines()


def test_sep_and_evidence():
    code, out = call("sep", "--q", 2, "--r", 3, "--J", "J12^2", "--s", 2, "--in-generators")
    assert code == 0 and "in generators: X + J12" in out
    code, out = call("sep", "--q", 2, "--r", 3, "--J", "J12^2", "--evidence", 3)
    assert code == 0 and out.count("factor degrees=") == 3
    code, out = call("sep", "--q", 2, "--r", 3, "--J", "J12", "--s", 1)
    assert code == 2


def test_subspace_roster():
    code, out = call("subspaces", "--q", 2, "--r", 3, "--s", 1)
    lines = out.splitlines()
    assert lines[-1] == "count: 7"
    assert sum(line.endswith("special") for line in lines) == 3


def test_distinguish(tmp_path):
    f = tmp_path / "mods.txt"
    f.write_text("# a1, a2\n1, T\nT, 1\nT+1, 1/T\n")
    code, out = call("distinguish", "--q", 2, "--r", 3, f)
    assert code == 0
    assert "result: PASS" in out and out.count("distinct") == 3
    f.write_text("0, 1\n0, u\n")
    assert call("distinguish", "--q", 2, "--r", 3, f)[0] == 2
    f.write_text("1\n")
    assert call("distinguish", "--q", 2, "--r", 3, f)[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "drinfeld_modpoly.cli", "invariants", "--q", "2", "--r", "3", "--emit", "canonical"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "J07 J12 J41 J70"
    proc = subprocess.run([sys.executable, "-m", "drinfeld_modpoly.cli", "torsion", "--P", "T^2"], capture_output=True, text=True)
    assert proc.returncode == 2 and "not a monic prime" in proc.stderr
