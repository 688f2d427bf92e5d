"""Tests for parameter-file loading and saving."""

import json
from pathlib import Path

import pytest

from sea_mtt.config import SeaConfig
from sea_mtt.core.model import LoadCase
from sea_mtt.exceptions import ConfigError

REPO_CONFIG = Path(__file__).parent.parent / "config"


class TestLoad:
    def test_defaults_without_file(self):
        cfg = SeaConfig.load(None)
        params = cfg.to_params()
        assert params.n_m == 8.0
        assert params.load_case is LoadCase.DYNAMIC
        assert cfg.to_controller().k_p == 0.8
        assert cfg.to_grid().points == 2000

    def test_partial_file_keeps_defaults(self, write_config):
        cfg = SeaConfig.load(write_config(nm=1.0, load_case="static", grid={"points": 100}))
        assert cfg.nm == 1.0
        assert cfg.to_params().is_static
        assert cfg.grid.points == 100
        assert cfg.grid.omega_max == 1000.0
        assert cfg.ks == 1.1

    def test_unknown_key(self, write_config):
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(write_config(kss=1.0))
        assert exc.value.key == "kss"
        assert "Unknown configuration key" in str(exc.value)

    def test_negative_stiffness(self, write_config):
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(write_config(ks=-1.0))
        assert exc.value.key == "ks"

    def test_fixed_load_ignores_load_inertia(self, write_config):
        cfg = SeaConfig.load(write_config(load_case="static", jl=0.0))
        params = cfg.to_params()
        assert params.is_static
        assert params.j_l == 0.0

    def test_free_load_needs_load_inertia(self, write_config):
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(write_config(jl=0.0))
        assert exc.value.key == "jl"
        assert "dynamic load" in str(exc.value)

    def test_bad_load_case(self, write_config):
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(write_config(load_case="rigid"))
        assert exc.value.key == "load_case"

    def test_grid_range(self, write_config):
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(write_config(grid={"omega_min": 10.0, "omega_max": 1.0}))
        assert exc.value.key == "grid"

    def test_grid_points(self, write_config):
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(write_config(grid={"points": 1}))
        assert exc.value.key == "grid.points"

    def test_malformed_json_reports_position(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n  "ks": 1.1,\n  "nm": \n}\n', encoding="utf-8")
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(path)
        assert exc.value.line == 4
        assert "line 4" in str(exc.value)

    def test_top_level_must_be_an_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ConfigError):
            SeaConfig.load(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            SeaConfig.load(tmp_path / "absent.json")

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "sea.yaml"
        path.write_text("nm: 36\nkd: 0\nsim:\n  dt: 0.001\n", encoding="utf-8")
        cfg = SeaConfig.load(path)
        assert cfg.nm == 36.0
        assert cfg.kd == 0.0
        assert cfg.sim.dt == 0.001

    def test_malformed_yaml_reports_position(self, tmp_path):
        path = tmp_path / "bad.yml"
        path.write_text("nm: 8\nks: [1.1\n", encoding="utf-8")
        with pytest.raises(ConfigError) as exc:
            SeaConfig.load(path)
        assert exc.value.line is not None

    @pytest.mark.parametrize("name", ["default.json", "default.yaml"])
    def test_bundled_files_hold_the_defaults(self, name):
        assert SeaConfig.load(REPO_CONFIG / name) == SeaConfig()


class TestSave:
    def test_round_trip(self, tmp_path):
        cfg = SeaConfig(nm=36.0, kp=1.0, kd=0.0, load_case="static")
        path = tmp_path / "out" / "sea.json"
        cfg.save(path)
        assert SeaConfig.load(path) == cfg
        assert [p.name for p in path.parent.iterdir()] == ["sea.json"]

    def test_yaml_round_trip(self, tmp_path):
        cfg = SeaConfig(ks=5.0)
        path = tmp_path / "sea.yaml"
        cfg.save(path)
        assert SeaConfig.load(path) == cfg

    def test_json_is_documented_syntax(self):
        data = json.loads(SeaConfig().dump())
        assert data["load_case"] == "dynamic"
        assert data["grid"]["points"] == 2000
        assert data["sim"]["duration"] is None
