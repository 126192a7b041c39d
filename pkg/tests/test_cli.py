import io
import json
import subprocess
import sys

import pytest

from thinspect.cli import main
from thinspect.families import FamilySpec, build_family
from thinspect.tree import random_tree, serialize_tree


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def write_tree(tmp_path, name, t):
    f = tmp_path / name
    f.write_text(serialize_tree(t) + "\n")
    return str(f)


def test_recognize_path(tmp_path):
    p = tmp_path / "p5.tree"
    assert run("gen", "--family", "Path", "--n", "5", "--output", str(p))[0] == 0
    assert run("recognize", "--input", str(p)) == (0, "pthin=1\n")


def test_recognize_t0_certificate(tmp_path):
    f = write_tree(tmp_path, "t0.tree", build_family(FamilySpec("T0")))
    cert = tmp_path / "t0.cert"
    assert run("recognize", "--input", f, "--certificate", str(cert)) == (0, "pthin>=3\n")
    obj = json.loads(cert.read_text())
    assert obj["verdict"] == "ge3" and obj["certificate"]["family"] == "T0"
    code, out = run("verify", "--input", f, "--certificate", str(cert))
    assert code == 0 and out.startswith("ok")


@pytest.mark.parametrize("seed", range(25))
def test_recognize_then_verify_round_trip(tmp_path, seed):
    f = write_tree(tmp_path, "t.tree", random_tree(4 + seed, seed))
    cert = str(tmp_path / "t.cert")
    assert run("recognize", "--input", f, "--certificate", cert)[0] == 0
    assert run("verify", "--input", f, "--certificate", cert, "--strong")[0] == 0
    assert run("verify", "--input", f, "--certificate", cert)[0] == 0


def test_verify_rejects_bad_certificate(tmp_path):
    f = write_tree(tmp_path, "p3.tree", build_family(FamilySpec("Path", (3,))))
    cert = tmp_path / "bad.cert"
    cert.write_text('{"pthin": 1, "ordering": [0, 2, 1], "classes": [0, 0, 0]}')
    code, out = run("verify", "--input", f, "--certificate", str(cert), "--strong")
    assert code == 1 and "backward" in out
    assert run("verify", "--input", f, "--certificate", str(cert))[0] == 0
    cert.write_text('{"verdict": "ge3", "certificate": {"family": "T0", "params": [], "vertices": [0]}}')
    assert run("verify", "--input", f, "--certificate", str(cert))[0] == 1
    cert.write_text("{broken")
    assert run("verify", "--input", f, "--certificate", str(cert))[0] == 1


def test_exact_and_cap(tmp_path):
    f = write_tree(tmp_path, "t0.tree", build_family(FamilySpec("T0")))
    assert run("exact", "--input", f) == (0, "pthin=3\n")
    assert run("exact", "--input", f, "--max-n", "10")[0] == 2


def test_exact_env_cap(tmp_path, monkeypatch):
    f = write_tree(tmp_path, "p.tree", build_family(FamilySpec("Path", (30,))))
    assert run("exact", "--input", f)[0] == 2
    monkeypatch.setenv("THINSPECT_MAX_ORACLE_N", "30")
    assert run("exact", "--input", f) == (0, "pthin=1\n")


def test_min_classes(tmp_path, claw):
    f = write_tree(tmp_path, "claw.tree", claw)
    order = tmp_path / "order.txt"
    order.write_text("0 1 2 3\n")
    assert run("min-classes", "--input", f, "--ordering", str(order), "--strong") == (0, "k=2\n0 3\n1 2\n")
    order.write_text("0 1 2\n")
    assert run("min-classes", "--input", f, "--ordering", str(order))[0] == 64


def test_gen_families(tmp_path):
    out = tmp_path / "x.tree"
    for argv in (["--family", "T2", "--params", "2,3,4"], ["--family", "TA"],
                 ["--family", "Random", "--n", "12", "--seed", "5"],
                 ["--family", "RandomCaterpillar", "--n", "30"], ["--family", "Star", "--n", "6"]):
        assert run("gen", *argv, "--output", str(out))[0] == 0
    assert run("gen", "--family", "T2", "--params", "1,2,2", "--output", str(out))[0] == 64
    assert run("gen", "--family", "Random", "--output", str(out))[0] == 64


def test_gen_seed_default_is_zero(tmp_path):
    a, b = tmp_path / "a.tree", tmp_path / "b.tree"
    run("gen", "--family", "Random", "--n", "15", "--output", str(a))
    run("gen", "--family", "Random", "--n", "15", "--seed", "0", "--output", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_detect(tmp_path):
    f = write_tree(tmp_path, "t0.tree", build_family(FamilySpec("T0")))
    assert run("detect", "--input", f) == (0, "T0: 0 1 2 3 4 5 6 7 8 9 10\n")
    g = write_tree(tmp_path, "p.tree", build_family(FamilySpec("Path", (4,))))
    assert run("detect", "--input", g) == (0, "none\n")


def test_enumerate_small():
    assert run("enumerate", "--n", "6", "--check", "agreement") == (0, "trees=1296 mismatches=0\n")


def test_audit(tmp_path):
    code, out = run("audit", "--ta")
    assert code == 0 and out.splitlines()[-1] == "PASS"
    code, out = run("audit", "--family", "T0")
    assert code == 0 and out.splitlines()[-1] == "PASS"
    assert run("audit", "--family", "Path")[0] == 64


def test_usage_errors(tmp_path):
    for argv in (["nope"], ["recognize"], ["recognize", "--input"], ["enumerate", "--n", "7"],
                 ["audit", "--ta", "--family", "T0"], ["recognize", "--input", "x", "--bogus"]):
        with pytest.raises(SystemExit) as err:
            main(argv, io.StringIO())
        assert err.value.code == 64
    assert run("recognize", "--input", str(tmp_path / "missing.tree"))[0] == 64
    bad = tmp_path / "bad.tree"
    bad.write_text("3\n0 1\n0 1\n")
    assert run("recognize", "--input", str(bad))[0] == 64


def test_determinism(tmp_path):
    f = write_tree(tmp_path, "t.tree", random_tree(14, 3))
    c1, c2 = tmp_path / "1.cert", tmp_path / "2.cert"
    assert run("recognize", "--input", f, "--certificate", str(c1)) == \
        run("recognize", "--input", f, "--certificate", str(c2))
    assert c1.read_bytes() == c2.read_bytes()


def test_module_entry_point(tmp_path):
    f = write_tree(tmp_path, "p.tree", build_family(FamilySpec("Path", (5,))))
    done = subprocess.run([sys.executable, "-m", "thinspect", "recognize", "--input", f],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout == "pthin=1\n"
    done = subprocess.run([sys.executable, "-m", "thinspect", "frobnicate"], capture_output=True, text=True)
    assert done.returncode == 64
