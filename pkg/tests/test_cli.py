import subprocess
import sys

import pytest

from bipknot.cli import RunConfig, main
from bipknot.families import catalog
from bipknot.graph import decode_graph6, encode_graph6

HEA = encode_graph6(catalog("HEAWOOD"))
K33 = encode_graph6(catalog("K33"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_families(capsys):
    code, out, _ = run(capsys, "families", "K7")
    lines = out.splitlines()
    assert code == 0
    assert lines[-1] == "family K7 size 20"
    assert len(lines) == 21
    for line in lines[:-1]:
        assert decode_graph6(line).num_edges == 21


def test_families_unknown(capsys):
    code, _, err = run(capsys, "families", "nope")
    assert code == 2 and "unknown catalog graph" in err


def test_minor_found(capsys):
    host = "M???FbKodOQ_H_E_?"  # one of the Heawood-parented 23-edge survivors
    code, out, _ = run(capsys, "minor", host, HEA)
    assert code == 0 and out.startswith("target: ")


def test_minor_absent(capsys):
    code, out, _ = run(capsys, "minor", K33, HEA)
    assert code == 1 and out.strip() == "none"


def test_minor_malformed(capsys):
    code, _, err = run(capsys, "minor", "A__", HEA)
    assert code == 2 and len(err.strip().splitlines()) == 1


def test_simplify(capsys):
    code, out, _ = run(capsys, "simplify", K33, "0", "3")
    lines = out.splitlines()
    assert code == 0
    assert decode_graph6(lines[0]).n == 0
    assert lines[1].split("\t")[2:] == ["NE", "NV3", "NV4", "NVY", "predicted", "actual"]
    assert lines[2].split("\t") == ["0", "3", "5", "4", "0", "0", "0", "0"]


def test_simplify_bad_pair(capsys):
    code, _, _ = run(capsys, "simplify", K33, "0", "0")
    assert code == 2


def test_bad_flags(capsys):
    assert run(capsys, "sieve", "--jobs", "0")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_run_config():
    with pytest.raises(ValueError):
        RunConfig(edge_budget=0)


def test_enumerate_is_idempotent(tmp_path, capsys):
    args = ["enumerate", "--edges", "15", "--jobs", "1", "--cache-dir", str(tmp_path)]
    code, first, _ = run(capsys, *args)
    assert code == 0 and "generated" in first
    before = {p.name: p.read_text() for p in tmp_path.iterdir()}
    code, second, _ = run(capsys, *args)
    assert code == 0 and "generated" not in second
    assert {p.name: p.read_text() for p in tmp_path.iterdir()} == before
    assert first.splitlines()[-1] == second.splitlines()[-1]


def test_sieve_writes_report(tmp_path, capsys):
    out = tmp_path / "out"
    code, text, _ = run(capsys, "sieve", "--edges", "21", "--jobs", "1",
                        "--cache-dir", str(tmp_path / "c"), "--out", str(out))
    assert code == 0
    assert (out / "verdicts_21.tsv").exists() and (out / "summary_21.txt").exists()
    assert "ik_by_minor 1" in text


def test_verify_theorem_mismatch_exit(tmp_path, capsys):
    # at 21 edges there is one certified graph, not six
    code, _, _ = run(capsys, "verify-theorem", "--edges", "21", "--jobs", "1",
                     "--cache-dir", str(tmp_path), "--out", str(tmp_path / "o"))
    assert code == 1


def test_jobs_parallel(tmp_path, capsys):
    code, text, _ = run(capsys, "sieve", "--edges", "18", "--jobs", "2",
                        "--cache-dir", str(tmp_path), "--out", str(tmp_path / "o"))
    assert code == 0 and "ik_by_minor 0" in text


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "bipknot.cli", "families", "K5"],
                       capture_output=True, text=True)
    lines = r.stdout.splitlines()
    assert r.returncode == 0 and lines[-1] == f"family K5 size {len(lines) - 1}"
