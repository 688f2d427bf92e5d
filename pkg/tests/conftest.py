"""
Shared fixtures: the identified test-bench parameters and small configs.
"""

import json

import pytest

from sea_mtt.core.model import ControllerParams, LoadCase, SeaParams
from sea_mtt.core.mtt import FrequencyGrid


def bench_params(**changes) -> SeaParams:
    """Identified bench parameters at N_m = 8, free load unless overridden."""
    base = dict(
        j_m=0.000075,
        j_l=0.005,
        b_m=0.0006,
        b_l=0.08,
        k_s=1.1,
        n_m=8.0,
        t_mc=0.0315,
        v_p=10.472,
        load_case=LoadCase.DYNAMIC,
    )
    base.update(changes)
    return SeaParams(**base)


@pytest.fixture
def make_params():
    return bench_params


@pytest.fixture
def dynamic_params() -> SeaParams:
    return bench_params()


@pytest.fixture
def static_params() -> SeaParams:
    return bench_params(load_case=LoadCase.STATIC)


@pytest.fixture
def pd_controller() -> ControllerParams:
    return ControllerParams(k_p=0.8, k_d=0.05)


@pytest.fixture
def p_controller() -> ControllerParams:
    return ControllerParams(k_p=1.0, k_d=0.0)


@pytest.fixture
def small_grid() -> FrequencyGrid:
    return FrequencyGrid(1e-2, 1e3, 400)


@pytest.fixture
def write_config(tmp_path):
    """Write a JSON parameter file and return its path."""

    def _write(name: str = "sea.json", **values) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(values), encoding="utf-8")
        return str(path)

    return _write
