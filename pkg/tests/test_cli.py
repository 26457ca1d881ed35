"""Command-line contract: exit codes, report schema, determinism."""

import json

import pytest

from wreathdunkl.cli import main


def run(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(args + ["--output", str(out)])
    data = json.loads(out.read_text()) if out.exists() else None
    return code, data


def test_verify_single_case_passes(tmp_path):
    code, data = run(
        ["verify", "--family", "cyclic", "--N", "2", "--m", "3", "--lambda", "1/2"],
        tmp_path,
    )
    assert code == 0
    assert data["pass"] is True
    assert data["version"]
    assert data["seed"] == 0
    assert all({"relation", "params", "pass"} <= set(c) for c in data["suite"])


def test_verify_dihedral_passes(tmp_path):
    code, data = run(
        [
            "verify", "--family", "dihedral", "--N", "2", "--m", "2",
            "--lambda", "1", "--mu", "1", "--rho", "0",
        ],
        tmp_path,
    )
    assert code == 0 and data["pass"]


def test_verify_corrupt_fails_with_witness(tmp_path):
    code, data = run(
        [
            "verify", "--family", "cyclic", "--N", "2", "--m", "3",
            "--lambda", "1/2", "--corrupt", "drels",
        ],
        tmp_path,
    )
    assert code == 1
    bad = [c for c in data["suite"] if not c["pass"]]
    assert bad and bad[0]["witness"] is not None


def test_verify_bad_config_exits_2(tmp_path):
    assert main(["verify", "--family", "cyclic", "--N", "2", "--m", "3",
                 "--lambda", "nonsense"]) == 2
    assert main(["verify", "--family", "cyclic", "--N", "2", "--m", "3",
                 "--corrupt", "everything"]) == 2


def test_lattice_labeled_rows(tmp_path):
    code, data = run(
        ["lattice", "--family", "dihedral-odd", "--N", "2", "--m", "3", "--label", "L2Nm"],
        tmp_path,
    )
    assert code == 0
    assert data["lattice"]["residual_max"] == "0"
    assert data["lattice"]["L"] == 12


def test_lattice_cyclic(tmp_path):
    code, data = run(["lattice", "--family", "cyclic", "--N", "5", "--m", "3"], tmp_path)
    assert code == 0
    assert data["lattice"]["residual_max"] == "0"
    assert len(data["lattice"]["positions"]) == 5


def test_lattice_scan_reports(tmp_path):
    code, data = run(
        ["lattice", "--family", "dihedral-even", "--N", "2", "--m", "2", "--scan", "--Lmax", "12"],
        tmp_path,
    )
    assert code == 0
    assert data["scan"]
    assert data["min_residual"] == data["scan"][0]["residual"]


def test_spectrum_cyclic(tmp_path):
    code, data = run(
        ["spectrum", "--family", "cyclic", "--N", "3", "--m", "1", "--n", "2"],
        tmp_path,
    )
    assert code == 0
    assert data["hermiticity_residual"] < 1e-12
    assert data["checks"]["oracle_max_deviation"] < 1e-8
    assert all(v < 1e-10 for v in data["checks"]["commutant"].values())
    assert len(data["eigenvalues"]) == 8
    assert sum(d["multiplicity"] for d in data["degeneracies"]) == 8


def test_spectrum_dihedral_reports_commutants(tmp_path):
    code, data = run(
        ["spectrum", "--family", "dihedral-odd", "--N", "2", "--m", "3", "--n", "2",
         "--label", "L2Nm", "--x-display"],
        tmp_path,
    )
    assert code == 0
    assert "commutant_report" in data["checks"]
    assert data["coupling_display"]


def test_spectrum_cap(tmp_path):
    assert main(["spectrum", "--family", "cyclic", "--N", "13", "--m", "1", "--n", "2"]) == 2


def test_export_objects(tmp_path):
    code, data = run(
        ["export", "--object", "d1", "--family", "cyclic", "--N", "2", "--m", "2",
         "--lambda", "1"],
        tmp_path,
    )
    assert code == 0
    # merged normal form: one Euler term plus two group terms
    assert len(data["operator"]) == 3
    code, data = run(["export", "--object", "Lambda", "--N", "2", "--m", "2", "--n", "2"], tmp_path)
    assert code == 0
    assert len(data["operator"]) == 4  # one per balanced-group element
    code, data = run(["export", "--object", "qk_lattice", "--N", "5", "--m", "3"], tmp_path)
    assert code == 0
    pos = data["lattice"]["positions"]
    assert len(pos) == 5 and all(p["order"] == 15 for p in pos)
    assert main(["export", "--object", "whatever"]) == 2


def test_reports_are_deterministic(tmp_path):
    _, a = run(["verify", "--family", "cyclic", "--N", "2", "--m", "2",
                "--lambda", "1", "--seed", "7"], tmp_path, "a.json")
    _, b = run(["verify", "--family", "cyclic", "--N", "2", "--m", "2",
                "--lambda", "1", "--seed", "7"], tmp_path, "b.json")
    a["config"].pop("output"), b["config"].pop("output")
    assert a == b
