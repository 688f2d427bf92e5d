"""Tests for the verification battery."""

import pytest

from sea_mtt.core.model import LoadCase
from sea_mtt.core.mtt import FrequencyGrid
from sea_mtt.core.verify import CheckResult, CheckStatus, VerificationReport, Verifier
from sea_mtt.exceptions import VerificationFailed


@pytest.fixture
def verifier(dynamic_params, pd_controller):
    return Verifier(dynamic_params, pd_controller, grid=FrequencyGrid(points=500), dt=1e-3)


def _all_passed(results):
    return all(r.passed for r in results), [(r.name, r.residual, r.message) for r in results]


class TestCheckResult:
    def test_against_tolerance(self):
        assert CheckResult.against("x", 1e-4, 1e-3).status is CheckStatus.PASSED
        assert CheckResult.against("x", 1e-2, 1e-3).status is CheckStatus.FAILED

    def test_nan_residual_fails(self):
        assert not CheckResult.against("x", float("nan"), 1.0).passed

    def test_report_raises_with_failed_names(self):
        report = VerificationReport(
            [CheckResult.against("good", 0.0, 1.0), CheckResult.against("bad", 2.0, 1.0)]
        )
        assert not report.passed
        with pytest.raises(VerificationFailed) as exc:
            report.raise_if_failed()
        assert exc.value.failed == ["bad"]

    def test_empty_report_is_not_a_pass(self):
        assert not VerificationReport().passed


class TestChecks:
    def test_assembly(self, verifier):
        ok, detail = _all_passed(verifier.check_assembly())
        assert ok, detail

    def test_dc_limits(self, verifier):
        ok, detail = _all_passed(verifier.check_dc_limits())
        assert ok, detail

    def test_dc_limits_fixed_load(self, static_params, pd_controller):
        results = Verifier(static_params, pd_controller).check_dc_limits()
        ok, detail = _all_passed(results)
        assert ok, detail
        assert "MTT_V(0) = 0" in results[1].message

    def test_static_limit(self, verifier):
        ok, detail = _all_passed(verifier.check_static_limit())
        assert ok, detail

    def test_static_limit_covers_the_whole_grid(self, dynamic_params, pd_controller):
        results = Verifier(dynamic_params, pd_controller).check_static_limit()
        ok, detail = _all_passed(results)
        assert ok, detail
        assert results[1].message == ""

    def test_static_limit_with_undamped_load(self, make_params, pd_controller):
        results = Verifier(make_params(b_l=0.0), pd_controller).check_static_limit()
        ok, detail = _all_passed(results)
        assert ok, detail

    def test_bandwidth_structure(self, verifier):
        ok, detail = _all_passed(verifier.check_bandwidth_structure())
        assert ok, detail

    @pytest.mark.parametrize("load_case", [LoadCase.DYNAMIC, LoadCase.STATIC])
    def test_cross_validation(self, verifier, load_case):
        results = verifier.check_cross_validation(load_case)
        ok, detail = _all_passed(results)
        assert ok, detail
        assert all(r.residual <= 0.02 for r in results)

    def test_fixed_load_config_without_load_inertia(self, make_params, pd_controller):
        params = make_params(load_case=LoadCase.STATIC, j_l=0.0)
        verifier = Verifier(params, pd_controller, grid=FrequencyGrid(points=500), dt=1e-3)
        ok, detail = _all_passed(verifier.check_cross_validation(LoadCase.DYNAMIC))
        assert ok, detail
        ok, detail = _all_passed(verifier.check_static_limit())
        assert ok, detail

    def test_convergence_at_default_step(self, dynamic_params, pd_controller):
        results = Verifier(dynamic_params, pd_controller, dt=1e-4).check_convergence()
        ok, detail = _all_passed(results)
        assert ok, detail

    def test_coarse_and_fine_runs_end_together(self, dynamic_params, pd_controller):
        # 10 periods at 10 rad/s is not a whole number of 1e-4 steps
        results = Verifier(dynamic_params, pd_controller, dt=1e-4).check_convergence()
        assert results[0].residual < 1e-9

    def test_convergence_fails_for_coarse_step(self, dynamic_params, pd_controller):
        results = Verifier(dynamic_params, pd_controller, dt=0.1).check_convergence()
        assert not results[0].passed

    def test_run_all_reports_progress(self, dynamic_params, pd_controller):
        labels = []
        verifier = Verifier(
            dynamic_params,
            pd_controller,
            grid=FrequencyGrid(points=300),
            dt=1e-3,
            frequencies=[5.0],
        )
        report = verifier.run_all(progress=labels.append)
        assert report.passed, [(c.name, c.residual, c.message) for c in report.failed]
        assert labels[0] == "Assembly paths"
        assert len(labels) == 7
