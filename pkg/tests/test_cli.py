"""End-to-end coverage of the operad-lab command line."""

import json
import shutil
import subprocess
import sys

import pytest

from operad_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compose_golden(capsys):
    code, out, _ = run(capsys, "compose", "--left", "4312", "--at", "1", "--right", "231")
    assert code == 0
    assert out == "564312\n"
    code, out, _ = run(capsys, "compose", "--left", "4312", "--at", "2", "--right", "231")
    assert (code, out) == (0, "645312\n")


def test_compose_json(capsys):
    code, out, _ = run(capsys, "compose", "--json", "--left", "12", "--at", "2", "--right", "21")
    assert code == 0
    data = json.loads(out)
    assert data["arity"] == 3
    assert data["terms"] == [{"basis": [1, 3, 2], "coeff": "1"}]


def test_face_and_degen(capsys):
    assert run(capsys, "face", "--element", "4312", "--at", "1")[1] == "312\n"
    assert run(capsys, "degen", "--element", "21", "--at", "1")[1] == "231\n"
    assert run(capsys, "degen", "--element", "21", "--at", "2")[1] == "312\n"


def test_boundary_and_coboundary(capsys):
    code, out, _ = run(capsys, "boundary", "--element", "312")
    assert (code, out) == (0, "-1*12\n")
    code, out, _ = run(capsys, "coboundary", "--element", "1")
    assert (code, out) == (0, "12\n")
    code, out, _ = run(capsys, "boundary", "--element", "4312")
    assert (code, out) == (0, "0\n")


def test_shift_operad_flag(capsys):
    code, out, _ = run(
        capsys, "boundary", "--operad", "shift", "--element", "(1,3,4)"
    )
    assert (code, out) == (0, "-1*2,3\n")
    code, out, _ = run(capsys, "face", "--operad", "shift", "--element", "2,5,7", "--at", "1")
    assert (code, out) == (0, "4,6\n")


def test_brace_and_products(capsys):
    code, out, _ = run(capsys, "brace", "--element", "12", "--with", "1", "--with", "1")
    assert (code, out) == (0, "12\n")
    code, out, _ = run(capsys, "odot", "--left", "12", "--right", "21")
    assert (code, out) == (0, "1243\n")
    code, out, _ = run(capsys, "dot", "--left", "12", "--right", "21")
    assert (code, out) == (0, "1243\n")
    # arity 1 x arity 1 flips the sign of the plain composition
    code, out, _ = run(capsys, "dot", "--left", "1", "--right", "1")
    assert (code, out) == (0, "-1*12\n")


def test_coproduct_output(capsys):
    code, out, _ = run(capsys, "coproduct", "--element", "21")
    assert code == 0
    assert out.splitlines() == ["() | 21", "1 | 1", "21 | ()"]
    code, out, _ = run(capsys, "coproduct", "--json", "--element", "21")
    data = json.loads(out)
    assert [len(entry["left"]["terms"]) for entry in data] == [1, 1, 1]


def test_endo_multimap_input(capsys):
    identity = json.dumps({"arity": 1, "coeffs": ["1", "0", "0", "1"]})
    code, out, _ = run(
        capsys, "face", "--operad", "endo:dual", "--field", "gfp:3",
        "--element", identity, "--at", "1",
    )
    assert (code, out) == (0, "()\n")


def test_element_from_file(tmp_path, capsys):
    payload = {
        "operad": "assoc",
        "arity": 3,
        "terms": [{"basis": [3, 1, 2], "coeff": "1"}],
    }
    path = tmp_path / "x.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    code, out, _ = run(capsys, "boundary", "--element", f"@{path}")
    assert (code, out) == (0, "-1*12\n")


def test_cohomology_human_and_json(capsys):
    args = ("cohomology", "--operad", "endo:dual", "--field", "gfp:3",
            "--lo", "0", "--hi", "3")
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert out.splitlines() == [
        "degree 0: dim 2 (rank of outgoing map 0)",
        "degree 1: dim 1 (rank of outgoing map 3)",
        "degree 2: dim 1 (rank of outgoing map 4)",
        "degree 3: dim 1 (rank of outgoing map 11)",
    ]
    code, out, _ = run(capsys, *args, "--json")
    data = json.loads(out)
    assert data["dims"] == [2, 1, 1, 1]
    assert data["warnings"] == []


def test_domain_errors_exit_one(capsys):
    code, _, err = run(capsys, "face", "--element", "21", "--at", "5")
    assert code == 1
    assert err.startswith("error:")
    assert run(capsys, "boundary", "--element", "122")[0] == 1
    assert run(capsys, "boundary", "--operad", "mystery", "--element", "1")[0] == 1
    assert run(capsys, "boundary", "--element", "@/no/such/file.json")[0] == 1


def test_usage_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["face", "--element", "21"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 64
    capsys.readouterr()


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "simplicial",
                       "--operad", "assoc", "--trials", "10")
    assert code == 0
    assert out.strip().endswith("(seed 0, total failures 0)")
    code, out, _ = run(capsys, "verify", "--suite", "brace", "--trials", "40")
    assert code == 2
    assert "fail" in out
    assert "boundary_brace_literal" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "chain",
                       "--operad", "assoc", "--trials", "10", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok"
    assert {row["suite"] for row in report["checks"]} == {"chain"}


def test_console_script_subprocess():
    exe = shutil.which("operad-lab")
    cmd = [exe] if exe else [sys.executable, "-m", "operad_lab.cli"]
    done = subprocess.run(
        cmd + ["compose", "--left", "4312", "--at", "1", "--right", "231"],
        capture_output=True, text=True, timeout=60,
    )
    assert done.returncode == 0
    assert done.stdout == "564312\n"
