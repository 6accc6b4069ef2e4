"""Command-line interface tests: exit codes, serialization, determinism."""

import json
import subprocess
import sys

import pytest

from ellfam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestExitCodes:
    def test_no_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_catalog_label(self, capsys):
        code, _out, err = run(capsys, "catalog", "NOPE-99")
        assert code == 2
        assert "NOPE-99" in err

    def test_unknown_scan_name(self, capsys):
        code, _out, err = run(capsys, "scan", "--name", "bogus", "--radius", "1")
        assert code == 2
        assert "bogus" in err

    def test_bad_budget_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--budget", "banana", "catalog"])
        assert exc.value.code == 2

    def test_bad_env_budget_is_usage_error(self, capsys, monkeypatch):
        monkeypatch.setenv("ELLFAM_BUDGET", "not-a-budget")
        with pytest.raises(SystemExit) as exc:
            main(["catalog"])
        assert exc.value.code == 2

    def test_env_budget_honored(self, capsys, monkeypatch):
        monkeypatch.setenv("ELLFAM_BUDGET", "10000,10000")
        code, out, _err = run(capsys, "torsion", "--curve", "0,0,0,0,16")
        assert code == 0
        assert json.loads(out)["structure"] == [3]


class TestCatalog:
    def test_listing_is_deterministic_json(self, capsys):
        code1, out1, _ = run(capsys, "catalog")
        code2, out2, _ = run(capsys, "catalog")
        assert code1 == code2 == 0
        assert out1 == out2
        rows = json.loads(out1)
        labels = [r["label"] for r in rows]
        assert "Z8-1" in labels and "Z2x6R2-5" in labels

    def test_single_entry(self, capsys):
        code, out, _ = run(capsys, "catalog", "Z8R2-1")
        assert code == 0
        row = json.loads(out)
        assert row["torsion"] == "Z/8"
        assert row["rank"] == 2
        assert len(row["sections_x"]) == 2


class TestSpecialize:
    def test_rational_parameter_roundtrip(self, capsys):
        code, out, _ = run(capsys, "specialize", "Z8R2-1", "--u", "22")
        assert code == 0
        payload = json.loads(out)
        assert payload["u"] == "22"
        # coordinates are exact p/q strings
        for pt in payload["points"]:
            assert all("/" in c or c.lstrip("-").isdigit() for c in pt)

    def test_fractional_u(self, capsys):
        code, out, _ = run(capsys, "specialize", "Z2x6R2-1", "--u=-5/6")
        assert code == 0
        assert json.loads(out)["u"] == "-5/6"


class TestTorsion:
    def test_catalog_member(self, capsys):
        code, out, _ = run(capsys, "torsion", "Z8R2-1", "--u", "22")
        assert code == 0
        payload = json.loads(out)
        assert payload["structure"] == [8]
        assert payload["order"] == 8

    def test_explicit_curve(self, capsys):
        code, out, _ = run(capsys, "torsion", "--curve", "0,0,0,-1,0")
        assert code == 0
        assert json.loads(out)["structure"] == [2, 2]


class TestLocalAndRootNumber:
    def test_local_places(self, capsys):
        code, out, _ = run(capsys, "local", "--curve", "0,0,0,-1,0")
        assert code == 0
        payload = json.loads(out)
        assert payload["complete"] is True
        assert payload["places"][0]["p"] == 2
        assert payload["places"][0]["kodaira"] == "III"

    def test_single_prime(self, capsys):
        code, out, _ = run(capsys, "local", "--curve", "0,0,0,0,16", "--prime", "3")
        assert code == 0
        payload = json.loads(out)
        assert [pl["p"] for pl in payload["places"]] == [3]

    def test_root_number(self, capsys):
        code, out, _ = run(capsys, "rootnumber", "--curve", "0,0,0,0,16")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == 1
        assert payload["complete"] is True
        assert payload["local"] == {"3": -1}


class TestHeights:
    def test_independent_point(self, capsys):
        code, out, _ = run(
            capsys, "heights", "--curve", "0,0,0,0,-2", "--points", "3,5"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["certificate"] == "independent"
        assert float(payload["heights"][0]) > 0

    def test_no_points_is_usage_error(self, capsys):
        code, _out, err = run(capsys, "heights", "--curve", "0,0,0,0,-2")
        assert code == 2
        assert "no points" in err


class TestSections:
    def test_verified_family(self, capsys):
        code, out, _ = run(capsys, "sections", "Z2x6R2-3")
        assert code == 0
        payload = json.loads(out)
        assert payload["points_on_curve"] is True
        assert all(s["verified"] for s in payload["sections"])


class TestScan:
    def test_csv_output(self, capsys, tmp_path):
        out_file = tmp_path / "grid.csv"
        code, _out, err = run(
            capsys,
            "--format", "csv", "--budget", "10000,10000",
            "scan", "--name", "Z8-scan-2", "--radius", "1",
            "--out", str(out_file),
        )
        assert code == 0
        lines = out_file.read_text().strip().split("\n")
        assert lines[0] == "n,m,root,complete,skipped"
        assert len(lines) == 10
        summary = json.loads(err.strip().split("\n")[-1])
        assert summary["symmetry_violations"] == 0

    def test_spec_file(self, capsys, tmp_path):
        spec_file = tmp_path / "spec.json"
        spec_file.write_text(json.dumps({"name": "Z8-scan-2", "radius": 1}))
        out_file = tmp_path / "grid.json"
        code, _out, _err = run(
            capsys,
            "--budget", "10000,10000",
            "scan", "--spec", str(spec_file), "--out", str(out_file),
        )
        assert code == 0
        payload = json.loads(out_file.read_text())
        assert payload["name"] == "Z8-scan-2"
        assert len(payload["cells"]) == 9


def test_console_script_help():
    proc = subprocess.run(
        [sys.executable, "-m", "ellfam.cli", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    for sub in ("catalog", "specialize", "torsion", "local", "rootnumber",
                "heights", "sections", "scan", "verify-all"):
        assert sub in proc.stdout
