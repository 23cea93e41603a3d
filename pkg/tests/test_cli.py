"""Command line surface: subcommands, exit codes, determinism."""

import io
import sys

import pytest

from qdual import cli


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = cli.main(argv)
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_check_ring_ok():
    code, out, _ = run_cli(["check-ring", "corpus:r5"])
    assert code == 0
    assert "OK" in out
    assert "radical-dim=2" in out


def test_check_ring_not_local():
    code, _, err = run_cli(["check-ring", "corpus:r7"])
    assert code == 1
    assert "locality" in err


def test_check_ring_missing_file():
    code, _, err = run_cli(["check-ring", "/nonexistent/ring.txt"])
    assert code == 2


def test_dual_prints_module_file(tmp_path):
    code, out, _ = run_cli(["dual", "--ring", "corpus:r3", "R"])
    assert code == 0
    assert "[module]" in out


def test_hom_and_tensor_dims():
    code, out, _ = run_cli(["hom", "--ring", "corpus:r5", "k", "R"])
    assert code == 0
    assert out.splitlines()[0] == "dim 2"
    code, out, _ = run_cli(["tensor", "--ring", "corpus:r5", "E", "k"])
    assert code == 0
    assert out.splitlines()[0] == "dim 2"


def test_ext_example_from_grammar():
    code, out, _ = run_cli(["ext", "--ring", "corpus:r3", "-i", "3",
                            "k", "k"])
    assert code == 0
    assert out.strip() == "dims 1 1 1 1"


def test_tor_example():
    code, out, _ = run_cli(["tor", "--ring", "corpus:r5", "-i", "3",
                            "k", "k"])
    assert code == 0
    assert out.strip() == "dims 1 2 4 8"


def test_resolve_betti():
    code, out, _ = run_cli(["resolve", "--ring", "corpus:r5", "-l", "4", "k"])
    assert code == 0
    assert out.strip() == "betti 1 2 4 8 16"


def test_classify_pass_and_fail():
    code, out, _ = run_cli(["classify", "--ring", "corpus:r5",
                            "--module", "E", "--as", "quasidualizing",
                            "--bound", "4"])
    assert code == 0
    assert "VERDICT PASS" in out
    code, out, _ = run_cli(["classify", "--ring", "corpus:r5",
                            "--module", "k", "--as", "semidualizing"])
    assert code == 1
    assert "VERDICT FAIL" in out


def test_module_file_argument(tmp_path):
    from qdual import builtin_module, corpus_ring, serialize_module
    ring = corpus_ring("r3")
    mod = builtin_module(ring, "k")
    path = tmp_path / "k.mod"
    path.write_text(serialize_module(mod))
    code, out, _ = run_cli(["resolve", "--ring", "corpus:r3", "-l", "3",
                            str(path)])
    assert code == 0
    assert out.strip() == "betti 1 1 1 1"


def test_verify_single_suite_exit_zero():
    code, out, _ = run_cli(["verify", "--ring", "corpus:r3",
                            "--suite", "hom-faithful", "--samples", "3",
                            "--seed", "5"])
    assert code == 0
    assert " FAIL " not in out
    assert out.splitlines()[-1].startswith("SUMMARY")


def test_verify_report_line_format():
    code, out, _ = run_cli(["verify", "--ring", "corpus:r3",
                            "--suite", "duality-swap", "--samples", "2",
                            "--seed", "5", "--bound", "3"])
    assert code == 0
    for line in out.splitlines():
        if line.startswith("CHECK"):
            parts = line.split()
            assert parts[2] in ("PASS", "FAIL", "VACUOUS")
            assert "/" in parts[1]


def test_verify_deterministic():
    argv = ["verify", "--ring", "corpus:r5", "--suite", "theorem-b",
            "--samples", "4", "--seed", "7", "--bound", "3"]
    code1, out1, _ = run_cli(argv)
    code2, out2, _ = run_cli(argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as info:
        cli.main(["verify", "--ring", "corpus:r3", "--samples", "0"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["no-such-command"])
    assert info.value.code == 2
