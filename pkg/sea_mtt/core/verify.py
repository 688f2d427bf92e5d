"""
Verification battery: frequency-domain predictions against the simulator.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np

from sea_mtt.constants import (
    CRITICAL_LEVEL,
    DC_PROBE_OMEGA,
    DEFAULT_BL,
    DEFAULT_DERATE_BAND,
    DEFAULT_DT,
    DEFAULT_JL,
    VERIFY_AMP_SCALE,
    VERIFY_ASSEMBLY_TOL,
    VERIFY_CONVERGENCE_TOL,
    VERIFY_DC_TOLERANCE,
    VERIFY_FREQUENCIES,
    VERIFY_LAST_CYCLES,
    VERIFY_MIN_DURATION,
    VERIFY_STATIC_SCALE,
    VERIFY_TOLERANCE,
    MIN_SIM_CYCLES,
)
from sea_mtt.core.bandwidth import Bandwidth, BandwidthReport, Binding, bandwidth
from sea_mtt.core.model import (
    ControllerParams,
    LoadCase,
    SeaParams,
    direct_mtt_tau,
    direct_mtt_v,
    max_output_torque,
)
from sea_mtt.core.mtt import (
    FrequencyGrid,
    mtt_arrays,
    mtt_dc_limit,
    mtt_tau_at,
    mtt_v_at,
    mtt_v_dc_limit,
)
from sea_mtt.core.sim import (
    SimConfig,
    Sine,
    relative_state_change,
    run,
    steady_state_peak,
)
from sea_mtt.exceptions import NumericalError, VerificationFailed

logger = logging.getLogger("sea-mtt.verify")

CONVERGENCE_FREQ = 10.0  # rad/s


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASSED = "passed"
    FAILED = "failed"


@dataclass
class CheckResult:
    """Result of one verification check."""

    name: str
    status: CheckStatus = CheckStatus.FAILED
    message: str = ""
    residual: Optional[float] = None
    tolerance: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    @classmethod
    def against(cls, name: str, residual: float, tolerance: float, message: str = "") -> "CheckResult":
        ok = math.isfinite(residual) and residual <= tolerance
        return cls(
            name=name,
            status=CheckStatus.PASSED if ok else CheckStatus.FAILED,
            message=message,
            residual=residual,
            tolerance=tolerance,
        )


@dataclass
class VerificationReport:
    """All check results of one battery run."""

    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def raise_if_failed(self) -> None:
        if not self.passed:
            raise VerificationFailed([c.name for c in self.failed] or ["no checks ran"])


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = np.maximum(np.abs(b), np.finfo(float).tiny)
    return float(np.max(np.abs(a - b) / scale))


class Verifier:
    """Runs the cross-validation battery for one parameter set."""

    def __init__(
        self,
        params: SeaParams,
        controller: ControllerParams,
        grid: Optional[FrequencyGrid] = None,
        dt: float = DEFAULT_DT,
        derate_band: float = DEFAULT_DERATE_BAND,
        frequencies: Optional[list[float]] = None,
        tolerance: float = VERIFY_TOLERANCE,
    ):
        """Initialize the verifier.

        Args:
            params: SEA parameters; the battery runs both load cases from them.
            controller: PD gains.
            grid: Search grid for the curve-based checks.
            dt: Simulation step.
            derate_band: Velocity derating band, as a fraction of V_p.
            frequencies: Sine frequencies (rad/s) of the cross-validation runs.
            tolerance: Relative tolerance of the cross-validation.
        """
        self.params = params
        self.controller = controller
        self.grid = grid or FrequencyGrid()
        self.dt = dt
        self.derate_band = derate_band
        self.frequencies = list(frequencies or VERIFY_FREQUENCIES)
        self.tolerance = tolerance

    def run_all(self, progress: Optional[Callable[[str], None]] = None) -> VerificationReport:
        """Run every check and collect the results."""
        report = VerificationReport()
        steps: list[tuple[str, Callable[[], list[CheckResult]]]] = [
            ("Assembly paths", self.check_assembly),
            ("DC limits", self.check_dc_limits),
            ("Static-load limit", self.check_static_limit),
            ("Bandwidth structure", self.check_bandwidth_structure),
            ("Cross-validation (dynamic)", lambda: self.check_cross_validation(LoadCase.DYNAMIC)),
            ("Cross-validation (static)", lambda: self.check_cross_validation(LoadCase.STATIC)),
            ("Step-size convergence", self.check_convergence),
        ]
        for label, check in steps:
            if progress:
                progress(label)
            results = check()
            for r in results:
                logger.info("%s: %s (residual %s)", r.name, r.status.value, r.residual)
            report.checks.extend(results)
        return report

    def check_assembly(self) -> list[CheckResult]:
        """Rational-function assembly against the pointwise closed-form MTT."""
        omegas = self.grid.omegas()
        tau, vel = mtt_arrays(self.params, self.controller, omegas)
        return [
            CheckResult.against(
                "assembly MTT_tau",
                _relative(tau, direct_mtt_tau(self.params, self.controller, omegas)),
                VERIFY_ASSEMBLY_TOL,
            ),
            CheckResult.against(
                "assembly MTT_V",
                _relative(vel, direct_mtt_v(self.params, self.controller, omegas)),
                VERIFY_ASSEMBLY_TOL,
            ),
        ]

    def check_dc_limits(self) -> list[CheckResult]:
        """Low-frequency evaluation against the closed-form DC limits."""
        p, c = self.params, self.controller
        dc_tau = mtt_dc_limit(p, c)
        results = [
            CheckResult.against(
                "DC limit MTT_tau",
                abs(mtt_tau_at(p, c, DC_PROBE_OMEGA) - dc_tau) / dc_tau,
                VERIFY_DC_TOLERANCE,
                f"closed form {dc_tau:.6g}",
            )
        ]
        if p.is_static:
            at_zero = mtt_v_at(p, c, 0.0)
            near_zero = mtt_v_at(p, c, DC_PROBE_OMEGA)
            results.append(
                CheckResult.against(
                    "DC limit MTT_V",
                    max(abs(at_zero), near_zero),
                    VERIFY_DC_TOLERANCE,
                    f"MTT_V(0) = {at_zero:g} for a fixed load",
                )
            )
        else:
            dc_v = mtt_v_dc_limit(p, c)
            results.append(
                CheckResult.against(
                    "DC limit MTT_V",
                    abs(mtt_v_at(p, c, DC_PROBE_OMEGA) - dc_v) / dc_v,
                    VERIFY_DC_TOLERANCE,
                    f"closed form {dc_v:.6g}",
                )
            )
        return results

    def check_static_limit(self) -> list[CheckResult]:
        """A very heavy, very damped free load must behave like a fixed one.

        The scaled load starts from the bench load when the configured one is
        undamped or absent, so the limit holds over the whole grid.
        """
        p, c = self.params, self.controller
        heavy = p.with_changes(
            load_case=LoadCase.DYNAMIC,
            j_l=max(p.j_l, DEFAULT_JL) * VERIFY_STATIC_SCALE,
            b_l=max(p.b_l, DEFAULT_BL) * VERIFY_STATIC_SCALE,
        )
        fixed = p.with_changes(load_case=LoadCase.STATIC)
        omegas = self.grid.omegas()
        heavy_tau, heavy_v = mtt_arrays(heavy, c, omegas)
        fixed_tau, fixed_v = mtt_arrays(fixed, c, omegas)
        return [
            CheckResult.against(
                "static limit MTT_tau", _relative(heavy_tau, fixed_tau), VERIFY_DC_TOLERANCE
            ),
            CheckResult.against(
                "static limit MTT_V", _relative(heavy_v, fixed_v), VERIFY_DC_TOLERANCE
            ),
        ]

    def check_bandwidth_structure(self) -> list[CheckResult]:
        """Ordering of the combined bandwidth, root residuals and first-crossing property."""
        p, c = self.params, self.controller
        report = bandwidth(p, c, self.grid)
        omegas = self.grid.omegas()
        tau, vel = mtt_arrays(p, c, omegas)

        problems = _ordering_problems(report)
        worst_residual = 0.0
        for bw, fn, samples in (
            (report.omega_mt_tau, mtt_tau_at, tau),
            (report.omega_mt_v, mtt_v_at, vel),
        ):
            if not bw.is_finite:
                continue
            worst_residual = max(worst_residual, abs(fn(p, c, bw.omega) - CRITICAL_LEVEL))
            below = samples[omegas < bw.omega]
            if below.size and np.nanmax(below) > CRITICAL_LEVEL + 1e-6:
                problems.append(f"sample above 1 below {bw.omega:g} rad/s")

        return [
            CheckResult(
                name="bandwidth ordering",
                status=CheckStatus.FAILED if problems else CheckStatus.PASSED,
                message="; ".join(problems) or f"binding {report.binding.value}",
            ),
            CheckResult.against("bandwidth root residual", worst_residual, 1e-4),
        ]

    def check_cross_validation(self, load_case: LoadCase) -> list[CheckResult]:
        """Unsaturated sine runs against MTT_τ(ω) and MTT_V(ω)."""
        j_l = self.params.j_l
        if load_case is LoadCase.DYNAMIC and j_l <= 0:
            # a fixed-load config may leave the load inertia unset
            j_l = DEFAULT_JL
        p = self.params.with_changes(load_case=load_case, j_l=j_l)
        c = self.controller
        amplitude = VERIFY_AMP_SCALE * max_output_torque(p)
        worst_tau = 0.0
        worst_v = 0.0
        try:
            for freq in self.frequencies:
                ref = Sine(freq=freq, amplitude=amplitude)
                duration = max(MIN_SIM_CYCLES * ref.period, VERIFY_MIN_DURATION)
                trace = run(
                    SimConfig(
                        params=p,
                        controller=c,
                        reference=ref,
                        dt=self.dt,
                        duration=duration,
                        limits_enabled=False,
                        derate_band=self.derate_band,
                    )
                )
                sim_tau = steady_state_peak(trace, "norm_torque", VERIFY_LAST_CYCLES, freq)
                sim_v = steady_state_peak(trace, "norm_vel", VERIFY_LAST_CYCLES, freq)
                want_tau = mtt_tau_at(p, c, freq)
                want_v = mtt_v_at(p, c, freq)
                err_tau = abs(sim_tau / VERIFY_AMP_SCALE - want_tau) / want_tau
                err_v = abs(sim_v / VERIFY_AMP_SCALE - want_v) / want_v
                logger.debug(
                    "%s at %g rad/s: MTT_tau sim/freq %.6g/%.6g, MTT_V sim/freq %.6g/%.6g",
                    load_case.value,
                    freq,
                    sim_tau / VERIFY_AMP_SCALE,
                    want_tau,
                    sim_v / VERIFY_AMP_SCALE,
                    want_v,
                )
                worst_tau = max(worst_tau, err_tau)
                worst_v = max(worst_v, err_v)
        except NumericalError as e:
            message = f"simulation failed: {e}"
            return [
                CheckResult(f"cross-validation MTT_tau ({load_case.value})", message=message),
                CheckResult(f"cross-validation MTT_V ({load_case.value})", message=message),
            ]

        where = ", ".join(f"{f:g}" for f in self.frequencies) + " rad/s"
        return [
            CheckResult.against(
                f"cross-validation MTT_tau ({load_case.value})", worst_tau, self.tolerance, where
            ),
            CheckResult.against(
                f"cross-validation MTT_V ({load_case.value})", worst_v, self.tolerance, where
            ),
        ]

    def check_convergence(self) -> list[CheckResult]:
        """Halving dt must leave the final state unchanged to 1e-6 relative."""
        p, c = self.params, self.controller
        ref = Sine(freq=CONVERGENCE_FREQ, amplitude=VERIFY_AMP_SCALE * max_output_torque(p))
        # whole number of coarse steps, so both runs end at the same instant
        duration = math.ceil(MIN_SIM_CYCLES * ref.period / self.dt) * self.dt
        name = "step-size convergence"
        try:
            coarse, fine = (
                run(
                    SimConfig(
                        params=p,
                        controller=c,
                        reference=ref,
                        dt=dt,
                        duration=duration,
                        limits_enabled=False,
                        derate_band=self.derate_band,
                    )
                )
                for dt in (self.dt, self.dt / 2.0)
            )
        except NumericalError as e:
            return [CheckResult(name, message=f"simulation failed: {e}")]
        change = relative_state_change(coarse.final_state, fine.final_state)
        return [CheckResult.against(name, change, VERIFY_CONVERGENCE_TOL, f"dt = {self.dt:g} s")]


def _ordering_problems(report: BandwidthReport) -> list[str]:
    tau, vel, combined = report.omega_mt_tau, report.omega_mt_v, report.omega_mt
    smaller: Bandwidth = min(tau, vel, key=Bandwidth.sort_key)
    problems = []
    if combined.sort_key() != smaller.sort_key():
        problems.append("omega_mt is not the smaller bandwidth")
    if report.binding is Binding.NEITHER and not (tau.is_unbounded and vel.is_unbounded):
        problems.append("binding 'neither' with a bounded channel")
    if report.binding is Binding.TORQUE and tau.sort_key() != combined.sort_key():
        problems.append("binding 'torque' does not match omega_mt")
    if report.binding is Binding.VELOCITY and vel.sort_key() != combined.sort_key():
        problems.append("binding 'velocity' does not match omega_mt")
    return problems
