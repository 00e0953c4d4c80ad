"""End-to-end tests of the command-line interface."""

import json
import math

import pytest

from kgbound import cli, scalar_linear as sl
from kgbound import coulomb_mixed as cm


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFmt:
    def test_zero(self):
        assert cli.fmt(0.0) == "0"
        assert cli.fmt(-0.0) == "0"

    def test_plain_range(self):
        assert cli.fmt(0.6) == "0.6"
        assert cli.fmt(-1.0) == "-1"
        assert cli.fmt(2.0 / 3.0) == "0.666666666667"

    def test_scientific_below_cutoff(self):
        assert "e" in cli.fmt(1e-4)
        assert cli.fmt(1.5e-11) == "1.50000000000e-11"

    def test_nan(self):
        assert cli.fmt(math.nan) == "nan"


class TestSpectrum:
    def test_mixed_csv(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--model", "mixed", "--q", "0.5",
                           "--n-max", "1", "--l-max", "0")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# schema=1"
        assert "0,0,particle,0.6,bound,0" in lines

    def test_scalar_ladder_column(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--model", "scalar-linear",
                           "--s", "0", "--n-max", "2", "--l-max", "2")
        assert code == 0
        for line in out.splitlines():
            if line.startswith("#") or line.startswith("n,"):
                continue
            n, l, _, _, e2, status = line.split(",")
            assert float(e2) == pytest.approx(4 * int(n) + 2 * int(l) + 3, abs=1e-9)
            assert status == "bound"

    def test_zero_coupling_all_threshold(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--model", "mixed", "--q", "0")
        assert code == 0
        body = [ln for ln in out.splitlines() if not ln.startswith(("#", "n,"))]
        assert body and all(ln.split(",")[4] == "threshold" for ln in body)

    def test_missing_coupling_exit_2(self, capsys):
        code, _, err = run(capsys, "spectrum", "--model", "mixed")
        assert code == 2
        assert "--q" in err

    def test_absolute_units(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--model", "mixed", "--q", "0.5",
                        "--rest-energy", "2", "--units", "absolute",
                        "--n-max", "0", "--l-max", "0")
        assert "0,0,particle,1.2,bound,0" in out.splitlines()

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--model", "mixed", "--q", "0.5",
                        "--output", "json", "--n-max", "2", "--l-max", "2")
        doc = json.loads(out)
        assert doc["schema"] == 1
        rows = cm.spectrum(cm.MixedCoulombParams(q=0.5), 2, 2)
        assert len(doc["rows"]) == len(rows)
        for got, exp in zip(doc["rows"], rows):
            assert got["n"] == exp.n and got["l"] == exp.l
            assert got["branch"] == exp.branch and got["status"] == exp.status
            assert got["energy"] == exp.energy  # full precision, no rounding
            assert got["residual"] == exp.residual

    def test_byte_identical_reruns(self, capsys):
        argv = ("spectrum", "--model", "scalar-linear", "--s", "1.5",
                "--length-scale", "0.7")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


class TestWavefunction:
    def test_shape_and_peak_location(self, capsys):
        code, out, _ = run(capsys, "wavefunction", "--model", "mixed",
                           "--q", "0.5", "--samples", "200",
                           "--r-min", "0.01", "--r-max", "25")
        assert code == 0
        rows = [ln.split(",") for ln in out.splitlines()
                if not ln.startswith(("#", "r,"))]
        r = [float(a) for a, _ in rows]
        u = [float(b) for _, b in rows]
        peak = r[u.index(max(u))]
        # ground state peaks at r = (L+1)/eps = 1/0.8
        assert peak == pytest.approx(1.25, rel=0.05)
        assert u[0] < max(u) and u[-1] < 1e-4 * max(u)

    def test_not_bound_exit_3(self, capsys):
        code, _, err = run(capsys, "wavefunction", "--model", "mixed",
                           "--q", "0.5", "--branch", "antiparticle")
        assert code == 3
        assert "not bound" in err

    def test_empty_sampling_header_only(self, capsys):
        code, out, _ = run(capsys, "wavefunction", "--model", "mixed",
                           "--q", "0.5", "--samples", "0")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "r,u"

    def test_scalar_gaussian(self, capsys):
        code, out, _ = run(capsys, "wavefunction", "--model", "scalar-linear",
                           "--s", "0", "--samples", "50", "--r-max", "6")
        assert code == 0
        rows = [ln.split(",") for ln in out.splitlines()
                if not ln.startswith(("#", "r,"))]
        norm2 = 2.0 * math.pi**-0.25  # of u = N r exp(-r^2/2)
        for a, b in rows[::7]:
            r = float(a)
            assert float(b) == pytest.approx(norm2 * r * math.exp(-0.5 * r * r),
                                             rel=1e-8, abs=1e-12)


class TestVerify:
    def test_scalar_corrected_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--model", "scalar-linear")
        assert code == 0
        assert "FAIL" not in out

    def test_as_printed_fails_oracle_check(self, capsys):
        code, out, _ = run(capsys, "verify", "--model", "scalar-linear",
                           "--mode", "as_printed")
        assert code == 1
        failing = [ln for ln in out.splitlines() if ln.endswith(",FAIL")]
        assert len(failing) == 1
        assert failing[0].startswith("scalar-oracle-agreement")

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "--model", "scalar-linear",
                           "--output", "json")
        assert code == 0
        doc = json.loads(out)
        assert all(c["status"] == "pass" for c in doc["checks"])


class TestNuSolve:
    def test_scalar_branch_coefficients(self, capsys):
        code, out, _ = run(capsys, "nu-solve", "--model", "scalar-linear",
                           "--s", "1")
        assert code == 0
        doc = json.loads(out)
        alpha2 = sl.LinearMassParams(s=1.0).alpha2(0)
        tau = doc["selected"]["tau"]
        assert tau[0] == pytest.approx(2.0 + math.sqrt(4.0 * alpha2 + 1.0), abs=1e-12)
        assert tau[1] == pytest.approx(-2.0, abs=1e-12)

    def test_mixed_branch(self, capsys):
        code, out, _ = run(capsys, "nu-solve", "--model", "mixed",
                           "--q", "0.5", "--energy", "0.6")
        assert code == 0
        doc = json.loads(out)
        assert doc["selected"]["pi"] == pytest.approx([1.0, -0.8], abs=1e-12)
        assert doc["quantization"]["lambda"] == pytest.approx(0.0, abs=1e-12)

    def test_mixed_requires_energy(self, capsys):
        code, _, err = run(capsys, "nu-solve", "--model", "mixed", "--q", "0.5")
        assert code == 2 and "--energy" in err

    def test_zero_coupling_threshold_reports_no_bound_state(self, capsys):
        code, out, _ = run(capsys, "nu-solve", "--model", "mixed",
                           "--q", "0", "--b", "0", "--energy", "1.0")
        assert code == 0
        doc = json.loads(out)
        assert doc["selected"] is None
        assert "error" in doc


class TestSweep:
    def test_equal_mix_formula(self, capsys):
        values = "0.1,0.3,0.5,0.7,0.9"
        code, out, _ = run(capsys, "sweep", "--model", "mixed", "--key", "q",
                           "--values", values, "--n-max", "0", "--l-max", "0")
        assert code == 0
        got = {}
        for line in out.splitlines():
            if line.startswith("#") or line.startswith("q,"):
                continue
            q, n, l, branch, energy, status, _ = line.split(",")
            if branch == "particle":
                got[float(q)] = float(energy)
        for q in (0.1, 0.3, 0.5, 0.7, 0.9):
            assert got[q] == pytest.approx((1 - q * q) / (1 + q * q), abs=1e-9)

    def test_mass_shape_drives_to_threshold(self, capsys):
        code, out, _ = run(capsys, "sweep", "--model", "mixed", "--key", "b",
                           "--values", "0,0.5,1", "--q", "0.5",
                           "--n-max", "0", "--l-max", "0")
        assert code == 0
        status = {}
        for line in out.splitlines():
            if line.startswith("#") or line.startswith("b,"):
                continue
            b, _, _, branch, energy, st, _ = line.split(",")
            if branch == "particle":
                status[float(b)] = (float(energy), st)
        assert status[0.0][1] == "bound"
        assert status[0.5][0] > status[0.0][0]
        assert status[1.0] == (1.0, "threshold")

    def test_unknown_key_exit_2(self, capsys):
        code, _, err = run(capsys, "sweep", "--model", "mixed", "--key", "mass",
                           "--values", "1,2", "--q", "0.5")
        assert code == 2 and "sweep key" in err

    def test_empty_values_header_only(self, capsys):
        code, out, _ = run(capsys, "sweep", "--model", "scalar-linear",
                           "--key", "s", "--values", "")
        assert code == 0
        assert out.splitlines()[-1].startswith("s,n,l,")


class TestConfigFile:
    def test_config_supplies_parameters(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("q = 0.5\nn_max = 0\nl_max = 0\n")
        code, out, _ = run(capsys, "spectrum", "--model", "mixed",
                           "--config", str(cfg))
        assert code == 0
        assert "0,0,particle,0.6,bound,0" in out.splitlines()

    def test_flags_override_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("q=0.1\nn_max=0\nl_max=0\n")
        _, out, _ = run(capsys, "spectrum", "--model", "mixed",
                        "--config", str(cfg), "--q", "0.5")
        assert "0,0,particle,0.6,bound,0" in out.splitlines()

    def test_unknown_key_exit_2(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("coupling=0.5\n")
        code, _, err = run(capsys, "spectrum", "--model", "mixed",
                           "--config", str(cfg))
        assert code == 2 and "coupling" in err
