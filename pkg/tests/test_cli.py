"""Command-line interface: formats, option precedence, exit codes."""

import json

import pytest

from anisobec import cli
from anisobec.solver import SWEEP_COLUMNS

FIG_ISO = ["--omega1", "0.1", "--omega2", "0.1", "--omega3", "0.1", "--natoms", "1000"]
FIG_OBL = ["--omega1", "0.3", "--omega2", "0.002", "--omega3", "0.002",
           "--natoms", "1000"]


class TestTemps:
    def test_text_output(self, capsys):
        rc = cli.main(["temps", *FIG_ISO])
        out = capsys.readouterr().out
        assert rc == 0
        assert "t3d" in out
        assert "DirectBEC" in out

    def test_json_output(self, capsys):
        rc = cli.main(["temps", *FIG_ISO, "--format", "json"])
        assert rc == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["natoms"] == 1000.0
        assert obj["temperatures"]["t3d"] == pytest.approx(0.9405, abs=1e-3)
        assert obj["temperatures"]["t2d_star"] is None
        assert obj["multistep"]["label"] == "DirectBEC"

    def test_inapplicable_coefficient_exit_code(self, capsys):
        rc = cli.main(["temps", *FIG_OBL, "--c2", "2"])
        assert rc == 3

    def test_full_solve_accepts_c2(self, capsys):
        rc = cli.main(["temps", *FIG_OBL, "--c2", "2", "--mode", "full_solve"])
        assert rc == 0


class TestSweep:
    ARGS = ["sweep", *FIG_ISO, "--tmin", "0.5", "--tmax", "1.5", "--points", "4"]

    def test_csv_header_and_shape(self, capsys):
        rc = cli.main(self.ARGS)
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "T,phi,z,frac0,frac1,frac2,frac3,eird,x1,x2,x3,xi_ratio"
        assert lines[0] == ",".join(SWEEP_COLUMNS)
        assert len(lines) == 5
        assert float(lines[1].split(",")[0]) == 0.5

    def test_deterministic_output(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        assert cli.main([*self.ARGS, "--out", str(a)]) == 0
        assert cli.main([*self.ARGS, "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_json_metadata(self, capsys):
        rc = cli.main([*self.ARGS, "--format", "json"])
        assert rc == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["metadata"]["points"] == 4
        assert len(obj["records"]) == 4

    def test_unwritable_out_exit_code(self, tmp_path, capsys):
        rc = cli.main([*self.ARGS, "--out", str(tmp_path / "missing" / "x.csv")])
        assert rc == 4

    def test_bad_atom_number_exit_code(self, capsys):
        rc = cli.main(["sweep", "--omega1", "0.1", "--omega2", "0.1", "--omega3",
                       "0.1", "--natoms", "0.5", "--tmin", "0.5", "--tmax", "1.0"])
        assert rc == 2

    def test_missing_required_exit_code(self, capsys):
        rc = cli.main(["sweep", *FIG_ISO, "--tmin", "0.5"])
        assert rc == 2


class TestConfigFile:
    def test_file_supplies_defaults(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({
            "omega1": 0.1, "omega2": 0.1, "omega3": 0.1, "natoms": 1000.0,
        }))
        rc = cli.main(["temps", "--config", str(cfg), "--format", "json"])
        assert rc == 0
        assert json.loads(capsys.readouterr().out)["natoms"] == 1000.0

    def test_cli_overrides_file(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({
            "omega1": 0.1, "omega2": 0.1, "omega3": 0.1, "natoms": 1000.0,
        }))
        rc = cli.main(["temps", "--config", str(cfg), "--natoms", "100",
                       "--format", "json"])
        assert rc == 0
        assert json.loads(capsys.readouterr().out)["natoms"] == 100.0

    def test_unknown_key_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"natoms": 1000.0, "omega4": 0.1}))
        rc = cli.main(["temps", "--config", str(cfg)])
        assert rc == 2

    def test_wrong_type_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({
            "omega1": 0.1, "omega2": 0.1, "omega3": 0.1, "natoms": "many",
        }))
        rc = cli.main(["temps", "--config", str(cfg)])
        assert rc == 2


class TestPhaseDiagram:
    def test_single_cell(self, capsys):
        rc = cli.main(["phase-diagram", "--natoms", "1000", "--ratio-max", "1",
                       "--ratio-points", "1"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "log10_ratio12,log10_ratio23,label"
        assert lines[1] == "0,0,DirectBEC"

    def test_small_grid_has_multiple_labels(self, capsys):
        rc = cli.main(["phase-diagram", "--natoms", "10000", "--ratio-max", "10000",
                       "--ratio-points", "8"])
        assert rc == 0
        out = capsys.readouterr().out
        labels = {line.rsplit(",", 1)[1] for line in out.splitlines()[1:]}
        assert "DirectBEC" in labels
        assert len(labels) >= 3

    def test_validation(self, capsys):
        rc = cli.main(["phase-diagram", "--natoms", "1000", "--ratio-max", "0.5"])
        assert rc == 2


class TestSimilarity:
    def test_csv_header(self, capsys):
        rc = cli.main(["similarity", "--omega1", "0.3", "--omega2", "0.3",
                       "--omega3", "0.0003", "--natoms", "10000",
                       "--tmin", "0.1", "--tmax", "0.8", "--points", "12"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "bucket,t_reduced,frac_normalized"
        buckets = {line.split(",", 1)[0] for line in lines[1:]}
        assert buckets == {"1", "3"}


class TestVerify:
    def test_default_run_passes(self, capsys):
        rc = cli.main(["verify"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "checks passed" in out
        assert "FAIL" not in out

    def test_impossible_tolerance_fails(self, capsys):
        rc = cli.main(["verify", "--match-tol", "1e-15"])
        out = capsys.readouterr().out
        assert rc == 1
        assert "FAIL" in out

    def test_json_format(self, capsys):
        rc = cli.main(["verify", "--format", "json"])
        assert rc == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["passed"] is True
        assert all(c["passed"] for c in obj["checks"])


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["temps", "--frequency", "0.1"])
    assert exc.value.code == 2
