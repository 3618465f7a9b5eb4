import json
import subprocess
import sys

import pytest

from freelie.cli import run
from freelie.eqn import EquationSystem, phi_system
from freelie.lie import FreeLieAlgebra
from freelie.scalars import QQ


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dims(capsys):
    code, out, _ = call(capsys, "dims", "--rank", "3", "--max-degree", "6")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()[1:]]
    assert [int(r[1]) for r in rows] == [3, 3, 8, 18, 48, 116]
    assert all(r[1] == r[2] for r in rows)


def test_hall_basis(capsys):
    code, out, _ = call(capsys, "--rank", "2", "hall-basis", "--max-degree", "3")
    assert code == 0
    assert out.splitlines()[:5] == ["a", "b", "[b,a]", "[[b,a],a]", "[[b,a],b]"]


def test_nf_and_bracket(capsys):
    assert call(capsys, "nf", "[a,b]")[1] == "-1*[b,a]\n"
    assert call(capsys, "bracket", "b", "a")[1] == "1*[b,a]\n"
    assert call(capsys, "bracket", "a", "a")[1] == "0\n"


def test_witness_commands(capsys):
    code, out, _ = call(capsys, "witness-s", "--r", "c", "--m", "0", "--n", "0")
    assert (code, out) == (0, "0\n")
    code, out, _ = call(capsys, "witness-t", "--r", "c", "--m", "2", "--n", "1")
    assert code == 0 and out.strip()
    code, _, _ = call(capsys, "witness-s", "--r", "b", "--m", "1", "--n", "2", "--partner", "c")
    assert code == 0


def test_encode_decode(capsys):
    code, out, _ = call(capsys, "encode", "--poly", "t+1", "--alpha", "5")
    assert code == 0
    element = out.strip()
    code, out, _ = call(capsys, "decode", element)
    assert out.splitlines() == ["f = t + 1", "alpha = 5"]
    code, _, err = call(capsys, "decode", "[c,b]")
    assert code == 2 and "error" in err


def test_psi_witness_and_check(capsys):
    for method in ("recursion", "linear"):
        code, out, _ = call(capsys, "psi-witness", "--poly", "t", "--alpha", "1", "--method", method)
        assert code == 0
        values = dict(line.split(" = ", 1) for line in out.splitlines())
        assert list(values) == ["x", "y", "z", "z1", "z2"]
        assert call(capsys, "psi-check", *values.values())[0] == 0
    assert call(capsys, "psi-check", "b", "0", "0", "0", "0")[:2] == (1, "false\n")


def test_oplus_check(capsys):
    assert call(capsys, "oplus-check", "[b,a,a] + a", "b + 2*a", "[b,a,a] + b")[0] == 0
    assert call(capsys, "oplus-check", "[b,a,a]", "[b,a,a]", "[b,a,a]")[0] == 1
    assert call(capsys, "oplus-check", "c", "b", "b")[0] == 2


def test_otimes_check(capsys):
    assert call(capsys, "otimes-check", "--f", "t", "--g", "t", "--h", "t^2")[0] == 0
    assert call(capsys, "otimes-check", "t", "t", "t^2+1")[0] == 1
    assert call(capsys, "otimes-check", "t", "t")[0] == 2


def test_field_check(capsys):
    assert call(capsys, "field-check", "mul", "--x", "2", "--y", "3", "--z", "6")[0] == 0
    assert call(capsys, "field-check", "mul", "--x", "2", "--y", "3", "--z", "5")[0] == 1
    assert call(capsys, "field-check", "add", "--x", "a;b;c", "--y", "a;b;c", "--z", "2")[0] == 0
    assert call(capsys, "field-check", "action", "--x", "[b,a]", "--y", "2", "--z", "2*[b,a]")[0] == 0
    assert call(capsys, "field-check", "add", "--x", "a;0;0", "--y", "1", "--z", "1")[0] == 2
    assert call(capsys, "--field", "fp:5", "field-check", "mul", "--x", "2", "--y", "3", "--z", "1")[0] == 0


def test_compile_and_verify(tmp_path, capsys):
    poly = tmp_path / "P.json"
    poly.write_text(json.dumps({"field": "q", "equations": ["u*u = w"]}))
    compiled = tmp_path / "S.json"
    assert call(capsys, "compile", "--in", str(poly), "--out", str(compiled))[0] == 0
    doc = json.loads(compiled.read_text())
    assert doc["rank"] == 3 and "poly" in doc

    good = tmp_path / "good.json"
    good.write_text(json.dumps({"poly": {"u": "t", "w": "t^2"}}))
    code, out, _ = call(capsys, "verify", "--system", str(compiled), "--assignment", str(good))
    assert code == 0 and out.endswith("true\n")

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"poly": {"u": "t", "w": "t^2+1"}}))
    code, out, _ = call(capsys, "verify", "--system", str(compiled), "--assignment", str(bad))
    assert code == 1 and "FAIL" in out


def test_verify_plain_assignment(tmp_path, capsys):
    system = tmp_path / "S.json"
    system.write_text(json.dumps(EquationSystem.parse(FreeLieAlgebra(3, QQ), ["[x,a] = 0"]).to_json()))
    sigma = tmp_path / "sigma.json"
    sigma.write_text(json.dumps({"x": "2*a"}))
    assert call(capsys, "verify", "--system", str(system), "--assignment", str(sigma))[0] == 0
    sigma.write_text(json.dumps({"x": "b"}))
    code, out, _ = call(capsys, "verify", "--system", str(system), "--assignment", str(sigma))
    assert code == 1 and "FAIL residual 1*[b,a]" in out
    sigma.write_text(json.dumps({}))
    assert call(capsys, "verify", "--system", str(system), "--assignment", str(sigma))[0] == 2


def test_solve_truncated(tmp_path, capsys):
    system = tmp_path / "phi.json"
    system.write_text(json.dumps(phi_system(FreeLieAlgebra(3, QQ)).to_json()))
    out_path = tmp_path / "kernel.json"
    code, _, _ = call(
        capsys, "solve-truncated", "--system", str(system), "--degree", "3", "--project", "x,y", "--out", str(out_path)
    )
    assert code == 0
    result = json.loads(out_path.read_text())
    assert result["dimension"] == 4
    assert result["variables"] == ["x", "y"]
    fixed = tmp_path / "fixed.json"
    fixed.write_text(json.dumps({"x": "[b,a,a]", "y": "[c,a,a]"}))
    code, out, _ = call(capsys, "solve-truncated", "--system", str(system), "--degree", "3", "--fixed", str(fixed))
    assert code == 0 and json.loads(out)["particular"] is not None


def test_errors_exit_two(capsys):
    assert call(capsys, "--rank", "2", "encode", "--poly", "t")[0] == 2
    assert call(capsys, "nf", "[a,")[0] == 2
    assert call(capsys, "--field", "fp:4", "nf", "a")[0] == 2
    assert call(capsys, "no-such-command")[0] == 2
    assert call(capsys, "verify", "--system", "/nonexistent.json", "--assignment", "x")[0] == 2


def test_output_is_deterministic(capsys):
    argv = ["psi-witness", "--poly", "t^2 - 2*t + 1/2", "--alpha", "3", "--beta", "-1"]
    first = call(capsys, *argv)[1]
    assert call(capsys, *argv)[1] == first


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freelie.cli", "nf", "[a,b]"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "-1*[b,a]\n"
