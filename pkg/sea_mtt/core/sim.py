"""
Nonlinear time-domain simulation of the SEA under PD force feedback.

Fixed-step RK4 over the state (θ_m, v_m, θ_l, v_l). The controller output
passes through the motor torque clamp and the permissible-velocity derating
when limits are enabled. The derivative action uses the exact state
derivative, so the simulated loop matches C(s) = K_p + K_d s.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from sea_mtt.constants import (
    BLOWUP_LIMIT,
    DEFAULT_DERATE_BAND,
    DEFAULT_DT,
    DEFAULT_SIM_CYCLES,
    MIN_SIM_CYCLES,
    RK4_STABILITY_MARGIN,
)
from sea_mtt.core.model import ControllerParams, SeaParams
from sea_mtt.core.mtt import closed_loop_pair
from sea_mtt.exceptions import InsufficientDuration, InvalidParams, NumericalBlowup

logger = logging.getLogger("sea-mtt.sim")

State = tuple[float, float, float, float]
Derivative = Callable[[State, float], State]


@dataclass(frozen=True)
class Sine:
    """τ_d(t) = A sin(ω t)."""

    freq: float  # rad/s
    amplitude: float  # N·m

    def __post_init__(self) -> None:
        if not self.freq > 0:
            raise InvalidParams("freq", f"must be > 0 rad/s, got {self.freq}")
        if not self.amplitude > 0:
            raise InvalidParams("amplitude", f"must be > 0, got {self.amplitude}")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.freq

    def value(self, t: float) -> float:
        return self.amplitude * math.sin(self.freq * t)

    def rate(self, t: float) -> float:
        return self.amplitude * self.freq * math.cos(self.freq * t)


@dataclass(frozen=True)
class Chirp:
    """Linear chirp: instantaneous frequency f0 + (f1 − f0)·t/duration, in rad/s."""

    f0: float
    f1: float
    duration: float
    amplitude: float

    def __post_init__(self) -> None:
        if self.f0 < 0 or self.f1 < 0:
            raise InvalidParams("chirp", f"frequencies must be >= 0, got {self.f0}, {self.f1}")
        if not self.duration > 0:
            raise InvalidParams("chirp.duration", f"must be > 0, got {self.duration}")
        if not self.amplitude > 0:
            raise InvalidParams("amplitude", f"must be > 0, got {self.amplitude}")

    def phase(self, t: float) -> float:
        return self.f0 * t + (self.f1 - self.f0) * t * t / (2.0 * self.duration)

    def value(self, t: float) -> float:
        return self.amplitude * math.sin(self.phase(t))

    def rate(self, t: float) -> float:
        inst = self.f0 + (self.f1 - self.f0) * t / self.duration
        return self.amplitude * inst * math.cos(self.phase(t))


Reference = Union[Sine, Chirp]


@dataclass(frozen=True)
class SimConfig:
    """One simulation run."""

    params: SeaParams
    controller: ControllerParams
    reference: Reference
    dt: float = DEFAULT_DT
    duration: Optional[float] = None
    limits_enabled: bool = True
    derate_band: float = DEFAULT_DERATE_BAND

    def __post_init__(self) -> None:
        if self.duration is None:
            # default span: 20 reference periods, or the whole chirp
            if isinstance(self.reference, Sine):
                default = DEFAULT_SIM_CYCLES * self.reference.period
            else:
                default = self.reference.duration
            object.__setattr__(self, "duration", default)
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise InvalidParams("dt", f"must be > 0, got {self.dt}")
        if not (self.duration > 0 and math.isfinite(self.duration)):
            raise InvalidParams("duration", f"must be > 0, got {self.duration}")
        if not self.derate_band > 0:
            raise InvalidParams("derate_band", f"must be > 0, got {self.derate_band}")
        if isinstance(self.reference, Sine):
            needed = MIN_SIM_CYCLES * self.reference.period
            if self.duration < needed * (1.0 - 1e-12):
                raise InvalidParams(
                    "duration",
                    f"{self.duration:g} s is shorter than {MIN_SIM_CYCLES} cycles "
                    f"({needed:g} s) at {self.reference.freq:g} rad/s",
                )

    @property
    def samples(self) -> int:
        return int(math.floor(self.duration / self.dt + 1e-9)) + 1


@dataclass(frozen=True)
class SimState:
    """Motor and load angles (rad) and velocities (rad/s)."""

    theta_m: float = 0.0
    v_m: float = 0.0
    theta_l: float = 0.0
    v_l: float = 0.0

    def as_tuple(self) -> State:
        return (self.theta_m, self.v_m, self.theta_l, self.v_l)

    def deflection(self, n_m: float) -> float:
        """θ_d = N_m⁻¹ θ_m − θ_l."""
        return self.theta_m / n_m - self.theta_l


@dataclass
class SimTrace:
    """Sampled channels of a run, one entry per time step."""

    t: np.ndarray
    tau_d: np.ndarray
    tau_out: np.ndarray
    tau_c_cmd: np.ndarray
    tau_c_app: np.ndarray
    v_m: np.ndarray
    norm_torque: np.ndarray
    norm_vel: np.ndarray
    final_state: SimState

    CHANNELS = (
        "tau_d",
        "tau_out",
        "tau_c_cmd",
        "tau_c_app",
        "v_m",
        "norm_torque",
        "norm_vel",
    )

    def __len__(self) -> int:
        return len(self.t)

    def channel(self, name: str) -> np.ndarray:
        if name not in self.CHANNELS and name != "t":
            raise KeyError(f"Unknown trace channel: {name}")
        return getattr(self, name)


def limit_model(
    tau_cmd: float,
    v_m: float,
    p: SeaParams,
    derate_band: float = DEFAULT_DERATE_BAND,
) -> float:
    """Clamp to ±T_m.c, then derate linearly above V_p in the driving direction.

    Braking torque (opposite sign to v_m) is never derated.
    """
    tau = min(max(tau_cmd, -p.t_mc), p.t_mc)
    speed = abs(v_m)
    if tau * v_m > 0 and speed > p.v_p:
        tau *= max(0.0, 1.0 - (speed - p.v_p) / (derate_band * p.v_p))
    return tau


def plant_derivatives(x: State, tau_app: float, p: SeaParams) -> State:
    """Open-loop two-mass dynamics under the applied motor torque."""
    theta_m, v_m, theta_l, v_l = x
    tau_out = p.k_s * (theta_m / p.n_m - theta_l)
    a_m = (tau_app - p.b_m * v_m - tau_out / p.n_m) / p.j_m
    if p.is_static:
        return (v_m, a_m, 0.0, 0.0)
    return (v_m, a_m, v_l, (tau_out - p.b_l * v_l) / p.j_l)


def mechanical_energy(x: State, p: SeaParams) -> float:
    """Kinetic energy of both inertias plus the spring energy."""
    theta_m, v_m, theta_l, v_l = x
    theta_d = theta_m / p.n_m - theta_l
    energy = 0.5 * p.j_m * v_m * v_m + 0.5 * p.k_s * theta_d * theta_d
    if not p.is_static:
        energy += 0.5 * p.j_l * v_l * v_l
    return energy


def rk4_step(fn: Derivative, x: State, t: float, dt: float) -> State:
    """One classical Runge-Kutta step of ẋ = fn(x, t)."""
    h2 = 0.5 * dt
    k1 = fn(x, t)
    k2 = fn(tuple(xi + h2 * ki for xi, ki in zip(x, k1)), t + h2)
    k3 = fn(tuple(xi + h2 * ki for xi, ki in zip(x, k2)), t + h2)
    k4 = fn(tuple(xi + dt * ki for xi, ki in zip(x, k3)), t + dt)
    return tuple(
        xi + dt / 6.0 * (a + 2.0 * b + 2.0 * c + d) for xi, a, b, c, d in zip(x, k1, k2, k3, k4)
    )


class _ClosedLoop:
    """Controller, limits and plant folded into one derivative function."""

    def __init__(self, cfg: SimConfig):
        p, c = cfg.params, cfg.controller
        self.cfg = cfg
        self.p = p
        self.inv_n = 1.0 / p.n_m
        self.k_p = c.k_p
        self.k_d = c.k_d
        self.ref_value = cfg.reference.value
        self.ref_rate = cfg.reference.rate
        self.limits = cfg.limits_enabled
        self.band = cfg.derate_band

    def torques(self, x: State, t: float) -> tuple[float, float, float, float]:
        """(τ_d, τ_out, τ_cmd, τ_app) at state x and time t."""
        theta_m, v_m, theta_l, v_l = x
        k_s = self.p.k_s
        tau_d = self.ref_value(t)
        tau_out = k_s * (theta_m * self.inv_n - theta_l)
        e = tau_d - tau_out
        e_dot = self.ref_rate(t) - k_s * (v_m * self.inv_n - v_l)
        tau_cmd = self.inv_n * (self.k_p * e + self.k_d * e_dot)
        if self.limits:
            tau_app = limit_model(tau_cmd, v_m, self.p, self.band)
        else:
            tau_app = tau_cmd
        return tau_d, tau_out, tau_cmd, tau_app

    def __call__(self, x: State, t: float) -> State:
        return plant_derivatives(x, self.torques(x, t)[3], self.p)


def _check_finite(x: State, t: float) -> None:
    for value in x:
        if not math.isfinite(value) or abs(value) > BLOWUP_LIMIT:
            raise NumericalBlowup(t, abs(value))


def step(state: SimState, cfg: SimConfig, t: float) -> SimState:
    """Advance the closed loop by one RK4 step of ``cfg.dt`` from time t."""
    x = rk4_step(_ClosedLoop(cfg), state.as_tuple(), t, cfg.dt)
    _check_finite(x, t + cfg.dt)
    return SimState(*x)


def fastest_pole(p: SeaParams, c: ControllerParams) -> float:
    """Magnitude of the fastest root of the closed-loop characteristic polynomial."""
    tc, _ = closed_loop_pair(p, c)
    coeffs = np.trim_zeros(np.asarray(tc.den.coeffs)[::-1], "f")
    if coeffs.size < 2:
        return 0.0
    return float(np.max(np.abs(np.roots(coeffs))))


def run(cfg: SimConfig, initial: Optional[SimState] = None) -> SimTrace:
    """Integrate from rest (or ``initial``) over the configured duration.

    Raises:
        NumericalBlowup: if any state leaves the finite range.
    """
    lam = fastest_pole(cfg.params, cfg.controller)
    if cfg.dt * lam > RK4_STABILITY_MARGIN:
        logger.warning(
            "dt = %g s is coarse for the fastest closed-loop pole |λ| = %.4g rad/s "
            "(dt·|λ| = %.3g)",
            cfg.dt,
            lam,
            cfg.dt * lam,
        )

    loop = _ClosedLoop(cfg)
    p = cfg.params
    n = cfg.samples
    dt = cfg.dt
    x: State = (initial or SimState()).as_tuple()
    if p.is_static and (x[2] != 0.0 or x[3] != 0.0):
        raise InvalidParams("initial", "load angle and velocity must be zero for a fixed load")

    t_out = np.empty(n)
    tau_d = np.empty(n)
    tau_out = np.empty(n)
    tau_cmd = np.empty(n)
    tau_app = np.empty(n)
    v_m = np.empty(n)

    derated = 0
    for k in range(n):
        t = k * dt
        d, o, cmd, app = loop.torques(x, t)
        t_out[k] = t
        tau_d[k] = d
        tau_out[k] = o
        tau_cmd[k] = cmd
        tau_app[k] = app
        v_m[k] = x[1]
        if cfg.limits_enabled and abs(x[1]) > p.v_p and app * x[1] > 0:
            derated += 1
        if k < n - 1:
            x = rk4_step(loop, x, t, dt)
            _check_finite(x, (k + 1) * dt)

    if derated:
        logger.info(
            "Velocity derating active on %d of %d samples (band %g·V_p)",
            derated,
            n,
            cfg.derate_band,
        )

    return SimTrace(
        t=t_out,
        tau_d=tau_d,
        tau_out=tau_out,
        tau_c_cmd=tau_cmd,
        tau_c_app=tau_app,
        v_m=v_m,
        norm_torque=np.abs(tau_app) / p.t_mc,
        norm_vel=np.abs(v_m) / p.v_p,
        final_state=SimState(*x),
    )


def _window(trace: SimTrace, last_cycles: int, freq: float) -> np.ndarray:
    if last_cycles < 1:
        raise ValueError(f"last_cycles must be >= 1, got {last_cycles}")
    span = last_cycles * 2.0 * math.pi / freq
    t = trace.t
    covered = t[-1] - t[0]
    if covered < span * (1.0 - 1e-9):
        raise InsufficientDuration(
            f"Trace covers {covered:g} s, {last_cycles} cycles at {freq:g} rad/s need {span:g} s"
        )
    return t >= t[-1] - span * (1.0 + 1e-12)


def steady_state_peak(trace: SimTrace, channel: str, last_cycles: int, freq: float) -> float:
    """Largest |channel| over the final ``last_cycles`` periods at ``freq`` rad/s."""
    mask = _window(trace, last_cycles, freq)
    return float(np.max(np.abs(trace.channel(channel)[mask])))


@dataclass(frozen=True)
class TrackingError:
    """Peak and RMS of τ_d − τ_out over an analysis window."""

    peak: float
    rms: float
    amplitude: float
    max_torque: float

    @property
    def peak_norm_amp(self) -> float:
        return self.peak / self.amplitude

    @property
    def rms_norm_amp(self) -> float:
        return self.rms / self.amplitude

    @property
    def peak_norm_max(self) -> float:
        return self.peak / self.max_torque

    @property
    def rms_norm_max(self) -> float:
        return self.rms / self.max_torque


def tracking_error(
    trace: SimTrace,
    p: SeaParams,
    amplitude: float,
    last_cycles: Optional[int] = None,
    freq: Optional[float] = None,
) -> TrackingError:
    """Tracking error over the final cycles, or the whole trace without ``freq``."""
    err = trace.tau_d - trace.tau_out
    if freq is not None and last_cycles is not None:
        err = err[_window(trace, last_cycles, freq)]
    return TrackingError(
        peak=float(np.max(np.abs(err))),
        rms=float(np.sqrt(np.mean(err * err))),
        amplitude=amplitude,
        max_torque=p.n_m * p.t_mc,
    )


def relative_state_change(a: SimState, b: SimState) -> float:
    """‖a − b‖ / ‖b‖ over the full state vector."""
    va = np.asarray(a.as_tuple())
    vb = np.asarray(b.as_tuple())
    scale = np.linalg.norm(vb)
    if scale == 0:
        return float(np.linalg.norm(va))
    return float(np.linalg.norm(va - vb) / scale)
