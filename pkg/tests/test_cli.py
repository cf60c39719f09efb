import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from dirac_hawking import (
    HawkingParams,
    WernerParams,
    hawking_channel,
    log_negativity,
    threshold_closed_form,
    werner_state,
)
from dirac_hawking.cli import main
from dirac_hawking.sweep import Axis, SweepGrid, parse_axis, write_csv

TAU_X1 = 0.541135858172901010685511051766
TAU_X1P5 = 0.528661397170445855195426243527


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], np.array([[float(v) for v in r] for r in rows[1:]])


class TestPoint:
    def test_channel_off_singlet(self, capsys):
        code, out, _ = run(capsys, "point", "--F", "1", "--omega", "1", "-T", "0", "--json")
        r = json.loads(out)
        assert code == 0
        assert r["entangled"] is True
        assert r["log_negativity"] == pytest.approx(1.0, abs=1e-14)
        assert r["tau"] == 0.5

    def test_below_threshold(self, capsys):
        code, out, _ = run(capsys, "point", "--F", "0.5", "--omega", "1", "-T", "1")
        assert code == 0
        assert "verdict: separable" in out
        assert f"{TAU_X1:.12e}" in out

    def test_generic_above_threshold(self, capsys):
        code, out, _ = run(capsys, "point", "--F", "0.6", "--alpha", "0.6", "--omega", "1", "-T", "1", "--json")
        r = json.loads(out)
        assert code == 0 and r["entangled"]
        np.testing.assert_allclose(r["pt_eigenvalues_numeric"], r["pt_eigenvalues_closed_form"], atol=1e-12)
        assert len(r["rho_AI"]) == 4

    def test_maximal_closed_form_reported(self, capsys):
        _, out, _ = run(capsys, "point", "--F", "0.9", "--omega", "2", "-T", "1", "--json")
        r = json.loads(out)
        np.testing.assert_allclose(r["pt_eigenvalues_closed_form_maximal"], r["pt_eigenvalues_numeric"], atol=1e-12)

    def test_mass(self, capsys):
        M = 0.02
        _, out, _ = run(capsys, "point", "--F", "0.7", "--omega", "1", "--mass", str(M), "--json")
        r = json.loads(out)
        assert r["T"] == pytest.approx(1 / (8 * math.pi * M), abs=1e-12)
        assert r["M"] == M

    @pytest.mark.parametrize("argv, name", [
        (["--F", "1.5", "--omega", "1", "-T", "1"], "F"),
        (["--F", "0.5", "--alpha", "1.2", "--omega", "1", "-T", "1"], "alpha"),
        (["--F", "0.5", "--omega", "-1", "-T", "1"], "omega"),
        (["--F", "0.5", "--omega", "1", "-T", "-1"], "temperature"),
        (["--F", "0.5", "--omega", "1"], "temperature"),
    ])
    def test_invalid_parameters(self, capsys, argv, name):
        code, _, err = run(capsys, "point", *argv)
        assert code == 2
        assert name in err

    def test_temperature_and_mass_conflict(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["point", "--F", "0.5", "--omega", "1", "-T", "1", "-M", "1"])
        assert exc.value.code == 2


class TestFigures:
    def test_fig1(self, capsys):
        code, out, _ = run(capsys, "fig1")
        header, data = read_csv(out)
        assert code == 0 and header == ["T", "tau"]
        tau = data[:, 1]
        assert abs(tau[0] - 0.5) < 1e-6
        assert abs(tau[-1] - 4 / 7) < 1e-6
        assert np.all(np.diff(tau) >= 0)
        assert np.all((tau >= 0.5) & (tau <= 4 / 7))

    def test_fig2(self, capsys):
        code, out, _ = run(capsys, "fig2")
        header, data = read_csv(out)
        assert code == 0 and header == ["omega", "tau"]
        tau = data[:, 1]
        assert abs(tau[0] - 4 / 7) < 1e-6
        assert abs(tau[-1] - 0.5) < 1e-6
        assert np.all(np.diff(tau) <= 0)

    def test_fig3(self, capsys):
        code, out, _ = run(capsys, "fig3")
        header, data = read_csv(out)
        assert code == 0 and header == ["F", "alpha", "negativity"]
        F, N = data[:, 0], data[:, 2]
        assert np.all(N[F < TAU_X1P5] == 0.0)
        assert np.all(N[F > TAU_X1P5] > 0.0)
        assert np.all(N[F == 0.25] == 0.0)

    def test_fig3_channel_off(self, capsys):
        _, out, _ = run(capsys, "fig3", "-T", "0", "--grid", "F=0.5:1:3", "--grid", "alpha=0.5:0.9:3")
        _, data = read_csv(out)
        singlet = data[(data[:, 0] == 1.0)]
        # the partial transpose of alpha|01> - beta|10> has one negative eigenvalue, -alpha beta
        expected = np.log2(1 + 2 * singlet[:, 1] * np.sqrt(1 - singlet[:, 1] ** 2))
        np.testing.assert_allclose(singlet[:, 2], expected, atol=1e-11)

    def test_custom_grid(self, capsys):
        _, out, _ = run(capsys, "fig1", "--grid", "0.5:2:4")
        _, data = read_csv(out)
        np.testing.assert_array_equal(data[:, 0], [0.5, 1.0, 1.5, 2.0])

    def test_fig2_mass(self, capsys):
        _, out, _ = run(capsys, "fig2", "--grid", "1:2:2", "-M", str(1 / (8 * math.pi)))
        _, data = read_csv(out)
        assert data[0, 1] == pytest.approx(TAU_X1, abs=1e-11)

    @pytest.mark.parametrize("cmd", ["fig1", "fig2", "fig3"])
    def test_deterministic(self, capsys, cmd):
        _, a, _ = run(capsys, cmd)
        _, b, _ = run(capsys, cmd)
        assert a == b

    def test_rows_match_library(self, capsys):
        _, out, _ = run(capsys, "fig1", "--grid", "0.1:5:7")
        lines = out.splitlines()[1:]
        for line in lines:
            T_txt, tau_txt = line.split(",")
            assert tau_txt == "%.12e" % threshold_closed_form(1.0, float(T_txt)).tau
        _, out, _ = run(capsys, "fig3", "--grid", "F=0:1:5", "--grid", "alpha=0.2:0.8:3")
        for line in out.splitlines()[1:]:
            F, a, n = line.split(",")
            rho = hawking_channel(werner_state(WernerParams(float(F), float(a))),
                                  HawkingParams(1.5, temperature=1.0))
            assert n == "%.12e" % log_negativity(rho)


class TestSweep:
    def test_two_axes(self, capsys):
        code, out, _ = run(capsys, "sweep", "--grid", "F=0:1:3", "--grid", "alpha=0.2:0.8:2",
                           "--set", "omega=1", "--set", "T=1",
                           "--outputs", "tau,negativity,pt-eigenvalues,entangled")
        header, data = read_csv(out)
        assert code == 0
        assert header == ["F", "alpha", "tau", "negativity", "pt_eig_1", "pt_eig_2", "pt_eig_3", "pt_eig_4",
                          "entangled"]
        assert data.shape == (6, 9)
        np.testing.assert_array_equal(data[:, 0], [0, 0, 0.5, 0.5, 1, 1])
        np.testing.assert_array_equal(data[:, -1], [0, 0, 0, 0, 1, 1])
        np.testing.assert_allclose(data[:, 4:8].sum(axis=1), 1.0, atol=1e-11)

    def test_integer_column_format(self, capsys):
        _, out, _ = run(capsys, "sweep", "--grid", "F=0.9:1:2", "--set", "omega=1", "--set", "T=0",
                        "--outputs", "entangled")
        assert out.splitlines()[1].endswith(",1")

    def test_log_axis(self, capsys):
        _, out, _ = run(capsys, "sweep", "--grid", "M=0.01:1:3:log", "--set", "omega=1")
        _, data = read_csv(out)
        np.testing.assert_allclose(data[:, 0], [0.01, 0.1, 1.0], rtol=1e-12)

    @pytest.mark.parametrize("argv", [
        ["--grid", "F=0:1:2", "--grid", "alpha=0.1:0.9:2", "--grid", "omega=1:2:2", "--set", "T=1"],
        ["--grid", "F=0:1:2", "--set", "omega=1", "--set", "T=1", "--set", "M=1"],
        ["--grid", "F=0:1:1", "--set", "omega=1", "--set", "T=1"],
        ["--grid", "F=1:0:3", "--set", "omega=1", "--set", "T=1"],
        ["--grid", "F=0:1:3", "--set", "omega=1", "--set", "T=1", "--outputs", "concurrence"],
        ["--grid", "Q=0:1:3", "--set", "omega=1", "--set", "T=1"],
        ["--grid", "0:1:3", "--set", "omega=1", "--set", "T=1"],
        ["--grid", "F=0:1:3", "--set", "T=1"],
        ["--grid", "omega=0:1:3", "--set", "T=1", "--set", "omega=2"],
        ["--grid", "F=0:1:3", "--set", "omega=x"],
        ["--set", "omega=1"],
    ])
    def test_invalid_grids_exit_2(self, capsys, argv):
        code, _, err = run(capsys, "sweep", *argv)
        assert code == 2
        assert "error" in err

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "fig1.csv"
        code, out, _ = run(capsys, "fig1", "--grid", "1:2:3", "--out", str(path))
        assert code == 0 and out == ""
        raw = path.read_bytes()
        assert b"\r" not in raw
        assert raw.startswith(b"T,tau\n")

    def test_io_failure_exit_1(self, tmp_path, capsys):
        code, _, err = run(capsys, "fig1", "--out", str(tmp_path / "missing" / "x.csv"))
        assert code == 1
        assert err

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "dirac_hawking", "fig1", "--grid", "1:2:2"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.startswith("T,tau\n")


class TestGridObjects:
    def test_parse_axis(self):
        assert parse_axis("F=0:1:5") == Axis("F", 0.0, 1.0, 5)
        assert parse_axis("1e-3:1e3:7:log", "T") == Axis("T", 1e-3, 1e3, 7, "log")

    @pytest.mark.parametrize("text", ["F=0:1", "F=a:1:3", "F=0:1:3:cubic", "F=0:1:2.5"])
    def test_parse_axis_rejects(self, text):
        with pytest.raises(ValueError):
            parse_axis(text)

    def test_points_order(self):
        grid = SweepGrid((Axis("F", 0, 1, 2), Axis("alpha", 0.2, 0.4, 2)), {"omega": 1, "T": 1})
        assert [(p["F"], p["alpha"]) for p in grid.points()] == [(0, 0.2), (0, 0.4), (1, 0.2), (1, 0.4)]

    def test_write_csv(self):
        buf = io.StringIO()
        write_csv(SweepGrid((Axis("omega", 1, 2, 2),), {"T": 1.0}), buf)
        assert buf.getvalue() == "omega,tau\n1.000000000000e+00,%.12e\n2.000000000000e+00,%.12e\n" % (
            threshold_closed_form(1, 1).tau, threshold_closed_form(2, 1).tau)

    def test_log_spacing_needs_positive_start(self):
        with pytest.raises(ValueError, match="log"):
            Axis("T", 0.0, 1.0, 3, "log")
