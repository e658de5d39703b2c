import subprocess
import sys

import pytest

from kms.cli import main
from kms.graphs import parse_graph6, split_star, write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_spectrum_family(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--family", "split-star", "--n", "5", "--k-clique", "2"
    )
    assert code == 0
    assert out.strip() == "5.372281323"


def test_spectrum_inline_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "spectrum", "--g6", "Bw")
    assert code == 0
    assert out.strip() == "2"
    path = tmp_path / "two.g6"
    path.write_text("Bw\nBg\n")
    code, out, _ = run(capsys, "spectrum", "--file", str(path))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph6,value"
    assert lines[1].startswith("Bw,2")
    assert lines[2].startswith("Bg,2.732050808")


def test_wiener_and_bound(capsys):
    code, out, _ = run(capsys, "wiener", "--g6", "Bg")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "wiener", "--g6", "Bg", "--bound")
    assert code == 0 and out.strip() == "2.666666667"


def test_check_parity_exit_2(capsys):
    code, _, err = run(
        capsys, "check", "--g6", "Bw", "--property", "perfect-k-matching", "--k", "3"
    )
    assert code == 2
    assert "parity" in err or "odd" in err


def test_check_false_with_witness(capsys):
    code, out, _ = run(
        capsys,
        "check",
        "--family",
        "split-star",
        "--n",
        "6",
        "--k-clique",
        "2",
        "--property",
        "perfect-k-matching",
        "--k",
        "3",
    )
    assert code == 1
    assert out.startswith("false witness={0 1}")


def test_check_true(capsys):
    code, out, _ = run(
        capsys, "check", "--g6", write_graph6(split_star(6, 3)),
        "--property", "bicritical", "--k", "4",
    )
    assert code == 1  # the half split star is the bicritical exception
    code, out, _ = run(
        capsys, "check", "--g6", "Bw", "--property", "factor-critical", "--k", "2"
    )
    assert code == 0
    assert out.strip() == "true"


def test_oracle(capsys):
    from kms.graphs import complete_graph

    code, out, _ = run(
        capsys, "oracle", "--g6", write_graph6(complete_graph(5)),
        "--property", "factor-critical", "--k", "3",
    )
    assert code == 0
    assert out.strip() == "true"


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "5", "--count-only")
    assert code == 0
    assert out.strip() == "21"


def test_enumerate_lines_parse(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    for line in lines:
        assert parse_graph6(line).n == 4


def test_verify_writes_report(capsys, tmp_path):
    out_path = tmp_path / "report.csv"
    code, _, err = run(
        capsys,
        "verify", "--theorem", "T1", "--n", "6", "--k", "3", "--out", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 113  # header + 112 graphs
    assert "violations=0" in err
    assert "exceptions=1" in err


def test_verify_json_sampled(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run(
        capsys,
        "verify", "--theorem", "T1", "--n", "10", "--k", "3",
        "--source", "sample", "--samples", "50", "--seed", "9",
        "--format", "json", "--out", str(out_path),
    )
    assert code == 0
    import json

    payload = json.loads(out_path.read_text())
    assert payload["metadata"]["exhaustive"] is False
    assert payload["metadata"]["violations"] == 0


def test_verify_file_source(capsys, tmp_path):
    from pathlib import Path

    data = Path(__file__).parent / "data" / "connected_n7.g6"
    out_path = tmp_path / "t3.csv"
    code, _, err = run(
        capsys,
        "verify", "--theorem", "T3", "--n", "7", "--k", "3",
        "--source", "file", "--file", str(data), "--out", str(out_path),
    )
    assert code == 0
    assert len(out_path.read_text().splitlines()) == 854
    assert "violations=0" in err


def test_sharpness_cmd(capsys):
    code, out, _ = run(capsys, "sharpness", "--theorem", "T5", "--n", "7", "--k", "2")
    assert code == 0
    assert out.strip() == "PASS"


def test_minimize_cmd(capsys):
    from kms.enumeration import are_isomorphic

    code, out, _ = run(
        capsys,
        "minimize", "--property", "perfect-k-matching", "--k", "3", "--order", "6",
    )
    assert code == 0
    g6, lam = out.split()
    assert are_isomorphic(parse_graph6(g6), split_star(6, 2))
    assert lam == "7.274917218"


def test_lemmas_cmd(capsys):
    code, out, _ = run(capsys, "lemmas", "--lemma", "L2.8", "--max-n", "12")
    assert code == 0
    assert "0 failures" in out


def test_g6_roundtrip_cmd(capsys, tmp_path):
    path = tmp_path / "lines.g6"
    path.write_text("Bw\nBg\nB?\n")
    code, out, _ = run(capsys, "g6", "--file", str(path))
    assert code == 0
    assert "3 lines, 0 round-trip mismatches" in out


def test_bad_usage_exits_2(capsys):
    code, _, err = run(capsys, "spectrum", "--g6", "Bw", "--order", "4")
    assert code == 2
    assert "exactly one graph source" in err
    code, _, err = run(capsys, "spectrum", "--family", "split-star", "--n", "5")
    assert code == 2
    code, _, err = run(capsys, "spectrum", "--g6", "not graph6!")
    assert code == 2


def test_argparse_usage_error_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "kms.cli", "spectrum", "--badflag"],
        capture_output=True,
    )
    assert proc.returncode == 2


def test_workers_env_default(monkeypatch):
    monkeypatch.setenv("KMS_WORKERS", "3")
    from kms.cli import _build_parser

    args = _build_parser().parse_args(
        ["verify", "--theorem", "T1", "--n", "6", "--k", "1"]
    )
    assert args.workers == 3
