import io as _io
import json
import subprocess
import sys

import pytest

from hypdeg import certificates as cert
from hypdeg import io
from hypdeg.cli import main
from hypdeg.core import Hypergraph, enumerate_balanced_edges, enumerate_edges


@pytest.fixture
def ex1_files(tmp_path):
    k0 = cert.zero_weight_edges(enumerate_edges(16, 3), cert.EX1_W)
    edges = tmp_path / "K0.hg"
    edges.write_text("# zero-weight triples\n" + io.format_hypergraph(Hypergraph(16, 3, k0)))
    target = tmp_path / "p.txt"
    target.write_text(io.format_vector(cert.EX1_P))
    return str(edges), str(target)


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", _io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_example1_json(capsys):
    code, out, _ = run(["verify-paper", "--claim", "example1", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass" and len(data["checks"]) == 6
    assert all(c["status"] == "pass" for c in data["checks"])


@pytest.mark.parametrize("claim", ["example2", "lift-chain"])
def test_verify_other_claims(claim, capsys):
    assert run(["verify-paper", "--claim", claim], capsys)[0] == 0


def test_lattice_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["lattice", "--k", "3"], capsys, "2 4 6 8 0\n", monkeypatch)
    assert code == 1 and "false" in out
    code, _, _ = run(["lattice", "--k", "3"], capsys, "2 4 6 8 1\n", monkeypatch)
    assert code == 0


def test_lattice_balanced(capsys, monkeypatch):
    argv = ["lattice", "--lambda", "1", "1", "1", "--parts", "5", "6", "6"]
    vec = io.format_vector(cert.EX2_P, cert.EX2_SHAPE)
    assert run(argv, capsys, vec, monkeypatch)[0] == 0


def test_realize_example1_infeasible(ex1_files, capsys):
    edges, target = ex1_files
    code, out, _ = run(["realize", "--edges", edges, "--target", target, "--budget", "0",
                        "--json"], capsys)
    assert code == 1
    assert json.loads(out)["status"] == "Infeasible"


def test_realize_truncated_and_realizable(tmp_path, capsys):
    hg = tmp_path / "k5.hg"
    hg.write_text(io.format_hypergraph(Hypergraph(5, 3, enumerate_edges(5, 3))))
    t = tmp_path / "t.txt"
    t.write_text("3 3 3 3 3\n")
    assert run(["realize", "--edges", str(hg), "--target", str(t), "--budget", "1"], capsys)[0] == 2
    t.write_text("2 2 1 2 2\n")
    code, out, _ = run(["realize", "--edges", str(hg), "--target", str(t)], capsys)
    assert code == 0
    witness = io.parse_hypergraph(out.split("\n", 1)[1])
    assert len(witness) == 3


def test_member_both_ways(ex1_files, tmp_path, capsys):
    edges, target = ex1_files
    code, out, _ = run(["member", "--edges", edges, "--target", target, "--json"], capsys)
    assert code == 0
    coeffs = {t["coeff"] for t in json.loads(out)["decomposition"]}
    assert all("/" in c for c in coeffs)
    far = tmp_path / "far.txt"
    far.write_text("9 " * 15 + "9\n")
    code, out, _ = run(["member", "--edges", edges, "--target", str(far), "--json"], capsys)
    assert code == 1 and "certificate" in json.loads(out)


def test_faces_and_translate(ex1_files, tmp_path, capsys):
    edges, target = ex1_files
    w = tmp_path / "w.txt"
    w.write_text(io.format_vector(cert.EX1_W))
    code, out, _ = run(["faces", "--edges", edges, "--weights", str(w), "--target", target,
                        "--direction", "out_of_face", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["zero"]) == 15 and data["translated"] == list(cert.EX1_P)


def test_lift(capsys, monkeypatch):
    code, out, _ = run(["lift", "--k", "3"], capsys, io.format_vector(cert.EX1_P), monkeypatch)
    assert code == 0 and out.split()[-1] == "7"
    code, _, err = run(["lift", "--k", "3"], capsys, "1 1\n", monkeypatch)
    assert code == 3 and "divisible" in err


def test_coarsen(capsys):
    code, out, _ = run(["coarsen", "--lambda", "2", "1", "--parts", "11", "6",
                        "--fine", "5", "6", "6", "--N", "7", "--json"], capsys)
    assert code == 0 and len(json.loads(out)["weights"]) == 17
    code, _, _ = run(["coarsen", "--lambda", "2", "1", "--parts", "10", "6",
                      "--fine", "5", "6", "6"], capsys)
    assert code == 1


def test_scan_and_find(ex1_files, capsys):
    edges, _ = ex1_files
    code, out, _ = run(["scan", "--edges", edges, "--mod", "3", "--json"], capsys)
    assert code == 0 and [7, 8, 9, 10] in json.loads(out)["subsets"]
    code, out, _ = run(["scan", "--edges", edges, "--find", "--json"], capsys)
    assert code == 0 and json.loads(out)["status"] == "found"


def test_find_example2_with_hint(tmp_path, capsys):
    k0 = cert.zero_weight_edges(enumerate_balanced_edges(cert.EX2_SHAPE), cert.EX2_W)
    hg = tmp_path / "k0.hg"
    hg.write_text(io.format_hypergraph(Hypergraph(17, 3, k0, cert.EX2_SHAPE)))
    y = tmp_path / "y.txt"
    y.write_text("-1 -2 -3 -4 -5 ; 0 1 0 1 0 2 ; 1 2 3 4 1 3\n")
    code, out, _ = run(["scan", "--edges", str(hg), "--find", "--weights", str(y)], capsys)
    assert code == 0 and "11 9 6 3 1" in out


def test_exhaustive(capsys):
    code, out, _ = run(["exhaustive", "--n", "5", "--k", "3", "--cap", "6", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["nonrealizable_points"] == [] and data["status"] == "complete"
    assert run(["exhaustive", "--n", "5", "--k", "3", "--cap", "6", "--budget", "1"], capsys)[0] == 2


def test_malformed_input_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.hg"
    bad.write_text("5 3\n1 2 3\n1 2 z\n")
    t = tmp_path / "t.txt"
    t.write_text("1 1 1 0 0\n")
    code, _, err = run(["realize", "--edges", str(bad), "--target", str(t)], capsys)
    assert code == 3
    assert f"{bad}:3:5:" in err


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify-paper", "--claim", "nope"])
    assert exc.value.code == 3
    assert run(["lattice", "--target", "/nonexistent/x"], capsys)[0] == 3


def test_json_is_deterministic(ex1_files):
    edges, target = ex1_files
    argv = [sys.executable, "-m", "hypdeg.cli", "member", "--edges", edges, "--target", target,
            "--json"]
    a = subprocess.run(argv, capture_output=True, check=False).stdout
    b = subprocess.run(argv, capture_output=True, check=False).stdout
    assert a == b and a
    argv = [sys.executable, "-m", "hypdeg.cli", "verify-paper", "--claim", "example2", "--json"]
    assert subprocess.run(argv, capture_output=True).stdout == \
        subprocess.run(argv, capture_output=True).stdout


def test_log_env(ex1_files):
    edges, _ = ex1_files
    env = {"DEGSEQ_LOG": "DEBUG", "PATH": ""}
    r = subprocess.run([sys.executable, "-m", "hypdeg.cli", "scan", "--edges", edges],
                       capture_output=True, text=True, env=env)
    assert r.returncode == 0
    assert "DEBUG" in r.stderr
