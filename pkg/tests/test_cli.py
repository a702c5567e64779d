import os

import numpy as np
import pytest

from ccma import linalg
from ccma.cli import main
from ccma.builtin_data import INSTANCE_TEXT


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build(tmp_path, capsys, inst):
    code, out, _ = run(capsys, "build", "--out", str(tmp_path))
    assert code == 0
    assert "6/6 checks passed" in out
    for name in ("T", "T_inv", "T1"):
        with open(tmp_path / f"{name}.mat", encoding="utf-8") as fh:
            assert np.array_equal(linalg.parse_matrix(fh.read()), getattr(inst, name))


def test_build_rejects_bad_instance(tmp_path, capsys):
    lines = INSTANCE_TEXT.splitlines()
    i = next(i for i, ln in enumerate(lines) if ln.startswith("beta "))
    beta = lines[i].split()
    beta[1] = "%x" % (int(beta[1], 16) ^ 1)
    lines[i] = " ".join(beta)
    bad = tmp_path / "bad.ccma"
    bad.write_text("\n".join(lines) + "\n")
    code, out, err = run(capsys, "--instance", str(bad), "build", "--out", str(tmp_path / "o"))
    assert code == 2
    assert "residue-basis" in err
    assert not (tmp_path / "o").exists()


def test_corrupted_instance_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.ccma"
    bad.write_text(INSTANCE_TEXT.replace("point 0 0\n", "point 1 1\n"))
    code, _, err = run(capsys, "--instance", str(bad), "mul", "1" * 13, "1" * 13)
    assert code == 2 and "error" in err


def test_missing_instance_exits_3(tmp_path, capsys):
    code, _, _ = run(capsys, "--instance", str(tmp_path / "nope"), "mul", "1" * 13, "1" * 13)
    assert code == 3


def test_unwritable_out_exits_3(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, _ = run(capsys, "build", "--out", str(blocker / "sub"))
    assert code == 3


def test_mul(capsys):
    code, out, _ = run(capsys, "mul", "2100000000000", "1220000000000", "--bench", "all")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "9ac3f80134d47"
    assert any("model=S1" in ln and "total=1080" in ln for ln in lines)


def test_mul3(capsys):
    code, out, _ = run(capsys, "mul3", "a" * 13, "2100000000000", "1220000000000", "--bench", "S1")
    assert code == 0
    assert out.splitlines()[0] == "9ac3f80134d47"
    assert "total=2187" in out


def test_pow_trace(capsys):
    code, out, _ = run(capsys, "pow", "2100000000000", "--k", "15", "--algo", "sm",
                       "--trace", "--bench", "NS")
    assert code == 0
    assert "depth=4 width=2" in out
    assert out.count("op=hadamard") == 4


def test_pow_zero_is_identity(capsys):
    code, out, _ = run(capsys, "pow", "2100000000000", "--k", "0")
    assert code == 0 and out.strip() == "a" * 13


def test_pow_bad_params(capsys):
    assert run(capsys, "pow", "1" * 13, "--k", "5", "--r", "1", "--u", "2")[0] == 2
    assert run(capsys, "pow", "1" * 13, "--k", "5", "--r", "2")[0] == 2
    assert run(capsys, "pow", "1" * 13, "--k", "-5")[0] == 2


def test_bad_element_exits_2(capsys):
    code, _, err = run(capsys, "mul", "z" * 13, "1" * 13)
    assert code == 2 and "bad element" in err
    assert run(capsys, "mul", "1" * 12, "1" * 13)[0] == 2


def test_batch(capsys):
    code, out, _ = run(capsys, "batch", "2100000000000", "1220000000000", "a" * 13, "1" * 13,
                       "--strategy", "strassen")
    assert code == 0
    assert out.splitlines()[:2] == ["9ac3f80134d47", "1" * 13]
    assert run(capsys, "batch", "1" * 13)[0] == 2


def test_verify_deterministic(capsys):
    code, first, _ = run(capsys, "verify", "--trials", "5", "--seed", "7")
    assert code == 0
    assert first.strip().endswith("7/7 suites passed (trials=5, seed=7)")
    assert run(capsys, "verify", "--trials", "5", "--seed", "7")[1] == first


def test_verify_no_trials(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "0")
    assert code == 0 and "3/3 suites passed" in out


def test_instance_dump(capsys):
    code, out, _ = run(capsys, "instance")
    assert code == 0 and out == INSTANCE_TEXT
