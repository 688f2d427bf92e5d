"""End-to-end tests of the sea-mtt command line."""

import csv
import json

import pytest
from click.testing import CliRunner

from sea_mtt.cli import main
from sea_mtt.commands.sweep import SWEEP_HEADER

STATIC_P = dict(nm=1.0, load_case="static", kp=1.0, kd=0.0)
REGIME = dict(nm=1.0, load_case="static", kp=1.0, kd=0.15)


@pytest.fixture
def runner():
    return CliRunner()


def _rows(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.reader(f))


class TestAnalyze:
    def test_writes_the_full_grid(self, runner, tmp_path):
        out = tmp_path / "mtt.csv"
        result = runner.invoke(main, ["analyze", "--out", str(out)])
        assert result.exit_code == 0, result.output
        rows = _rows(out)
        assert rows[0] == ["omega_rad_s", "mtt_tau", "mtt_v", "limiting"]
        assert len(rows) == 2001
        assert float(rows[1][0]) == pytest.approx(0.01)
        assert {r[3] for r in rows[1:]} <= {"torque", "velocity", "none"}

    def test_fixed_load_starts_at_half(self, runner, tmp_path, write_config):
        out = tmp_path / "mtt.csv"
        result = runner.invoke(main, ["analyze", "-c", write_config(**STATIC_P), "-o", str(out)])
        assert result.exit_code == 0, result.output
        assert float(_rows(out)[1][1]) == pytest.approx(0.5, rel=1e-3)

    def test_numbers_survive_a_reparse(self, runner, tmp_path):
        out = tmp_path / "mtt.csv"
        runner.invoke(main, ["analyze", "--plant", "--out", str(out)])
        rows = _rows(out)
        assert rows[0][-1] == "plant_gain"
        for row in rows[1:50]:
            for cell in (row[0], row[1], row[2], row[4]):
                assert f"{float(cell):.9g}" == cell

    def test_output_is_deterministic(self, runner, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        runner.invoke(main, ["analyze", "-o", str(a)])
        runner.invoke(main, ["analyze", "-o", str(b)])
        assert a.read_bytes() == b.read_bytes()
        assert b"\r\n" not in a.read_bytes()

    def test_svg_plot(self, runner, tmp_path):
        svg = tmp_path / "mtt.svg"
        result = runner.invoke(main, ["analyze", "-o", str(tmp_path / "m.csv"), "--svg", str(svg)])
        assert result.exit_code == 0, result.output
        text = svg.read_text(encoding="utf-8")
        assert "<svg" in text
        assert "polyline" in text
        assert "MTT_tau" in text

    def test_fixed_load_without_load_inertia(self, runner, tmp_path, write_config):
        out = tmp_path / "mtt.csv"
        config = write_config(jl=0.0, **STATIC_P)
        result = runner.invoke(main, ["analyze", "-c", config, "-o", str(out)])
        assert result.exit_code == 0, result.output
        assert float(_rows(out)[1][1]) == pytest.approx(0.5, rel=1e-2)

    def test_invalid_parameter_exits_2(self, runner, write_config):
        result = runner.invoke(main, ["analyze", "-c", write_config(ks=-1.0)])
        assert result.exit_code == 2
        assert "ks" in result.output

    def test_malformed_file_exits_2(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{ nope", encoding="utf-8")
        result = runner.invoke(main, ["analyze", "-c", str(path)])
        assert result.exit_code == 2
        assert "line 1" in result.output


class TestBandwidth:
    def test_dc_limited_gain(self, runner, write_config):
        result = runner.invoke(main, ["bandwidth", "-c", write_config(kp=4.0)])
        assert result.exit_code == 0, result.output
        assert "zero (DC-limited)" in result.output
        assert "Binding factor: torque" in result.output

    def test_json_report(self, runner):
        result = runner.invoke(main, ["bandwidth", "--json"])
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data["binding"] in ("torque", "velocity")
        assert data["marginal_gain"] == pytest.approx(3.0833, abs=1e-4)
        assert data["omega_mt"]["kind"] == "finite"

    def test_fixed_load_has_no_marginal_gain(self, runner, write_config):
        result = runner.invoke(main, ["bandwidth", "-c", write_config(load_case="static")])
        assert result.exit_code == 0, result.output
        assert "n/a (static)" in result.output


class TestSweep:
    def test_dc_limited_flag_flips_at_marginal_gain(self, runner, tmp_path):
        out = tmp_path / "kp.csv"
        result = runner.invoke(
            main,
            ["sweep", "--param", "kp", "--from", "0.1", "--to", "6", "--points", "60", "-o", str(out)],
        )
        assert result.exit_code == 0, result.output
        rows = _rows(out)
        assert rows[0] == SWEEP_HEADER
        flags = [r[5] for r in rows[1:]]
        first = flags.index("1")
        assert float(rows[first][0]) < 3.0833 < float(rows[first + 1][0])
        assert set(flags[first:]) == {"1"}

    def test_gear_ratio_crossover(self, runner, tmp_path, write_config):
        out = tmp_path / "nm.csv"
        args = ["sweep", "-c", write_config(**STATIC_P), "-p", "nm", "--from", "1", "--to", "36"]
        result = runner.invoke(main, args + ["--log", "-n", "8", "-o", str(out)])
        assert result.exit_code == 0, result.output
        rows = _rows(out)
        assert rows[1][4] == "torque"
        assert rows[-1][4] == "velocity"

    def test_load_inertia_with_static_row(self, runner, tmp_path):
        out = tmp_path / "jl.csv"
        args = ["sweep", "-p", "jl", "--from", "0.003", "--to", "0.007", "-n", "3", "--with-static"]
        result = runner.invoke(main, args + ["-o", str(out)])
        assert result.exit_code == 0, result.output
        rows = _rows(out)
        assert [r[-1] for r in rows[1:]] == ["dynamic", "dynamic", "dynamic", "static"]
        for row in rows[1:]:
            float(row[0])
        assert rows[-1][0] == "nan"

    def test_single_point_rejected(self, runner):
        result = runner.invoke(main, ["sweep", "-p", "kp", "--from", "0.1", "--to", "1", "-n", "1"])
        assert result.exit_code == 2

    def test_empty_range_rejected(self, runner):
        result = runner.invoke(main, ["sweep", "-p", "kp", "--from", "2", "--to", "1"])
        assert result.exit_code == 2


class TestSimulate:
    def test_too_short_exits_2(self, runner, tmp_path):
        args = ["simulate", "--freq", "10", "--duration", "1", "-o", str(tmp_path / "s.csv")]
        result = runner.invoke(main, args)
        assert result.exit_code == 2
        assert "10 cycles" in result.output

    def test_needs_exactly_one_reference(self, runner, tmp_path):
        result = runner.invoke(main, ["simulate", "-o", str(tmp_path / "s.csv")])
        assert result.exit_code == 2

    def test_limits_bound_the_normalized_torque(self, runner, tmp_path, write_config):
        config = write_config(**REGIME)
        base = ["simulate", "-c", config, "--freq", "195", "--duration", "0.5"]
        on, off = tmp_path / "on.csv", tmp_path / "off.csv"
        assert runner.invoke(main, base + ["-o", str(on)]).exit_code == 0
        assert runner.invoke(main, base + ["--no-limits", "-o", str(off)]).exit_code == 0

        header = _rows(on)[0]
        assert header[0] == "t_s"
        col = header.index("norm_torque")
        assert max(float(r[col]) for r in _rows(on)[1:]) <= 1.0
        assert max(float(r[col]) for r in _rows(off)[1:]) > 1.0
        assert len(_rows(on)) == 5002

    def test_blowup_exits_3(self, runner, tmp_path, write_config):
        config = write_config(sim={"dt": 0.002}, **REGIME)
        args = ["simulate", "-c", config, "--freq", "195", "--no-limits", "-o", str(tmp_path / "s.csv")]
        result = runner.invoke(main, args)
        assert result.exit_code == 3
        assert not (tmp_path / "s.csv").exists()

    def test_chirp(self, runner, tmp_path):
        out = tmp_path / "chirp.csv"
        args = ["simulate", "--chirp", "0", "50", "--duration", "1", "--amp-scale", "0.2"]
        result = runner.invoke(main, args + ["-o", str(out)])
        assert result.exit_code == 0, result.output
        assert len(_rows(out)) == 10002


class TestVerify:
    def test_passes_on_bench_parameters(self, runner, write_config):
        config = write_config(sim={"dt": 0.001}, grid={"points": 500})
        result = runner.invoke(main, ["verify", "-c", config])
        assert result.exit_code == 0, result.output
        assert "checks passed" in result.output

    def test_passes_on_default_config(self, runner):
        result = runner.invoke(main, ["verify", "--json"])
        assert result.exit_code == 0, result.output
        assert '"passed": true' in result.output
        assert "step-size convergence" in result.output

    def test_coarse_step_fails(self, runner, write_config):
        config = write_config(sim={"dt": 0.1}, grid={"points": 300})
        result = runner.invoke(main, ["verify", "-c", config, "--json"])
        assert result.exit_code == 1
        assert '"passed": false' in result.output


class TestConfigCommands:
    def test_init_writes_defaults(self, runner, tmp_path):
        path = tmp_path / "sea.json"
        result = runner.invoke(main, ["config", "init", "--path", str(path)])
        assert result.exit_code == 0, result.output
        assert json.loads(path.read_text(encoding="utf-8"))["nm"] == 8.0

    def test_init_keeps_existing_file(self, runner, tmp_path):
        path = tmp_path / "sea.json"
        path.write_text("{}", encoding="utf-8")
        result = runner.invoke(main, ["config", "init", "--path", str(path)], input="n\n")
        assert result.exit_code == 0
        assert "cancelled" in result.output
        assert path.read_text(encoding="utf-8") == "{}"

    def test_show(self, runner):
        result = runner.invoke(main, ["config", "show"])
        assert result.exit_code == 0, result.output
        assert "Marginal K_p" in result.output
        assert "3.08333" in result.output


def test_version(runner):
    result = runner.invoke(main, ["version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.output
