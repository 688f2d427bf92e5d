"""
Maximum-torque bandwidth search and design-parameter sweeps.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional

import numpy as np
from scipy.optimize import bisect

from sea_mtt.constants import (
    BISECT_MAXITER,
    BISECT_RTOL,
    BISECT_XTOL,
    CRITICAL_LEVEL,
    DC_PROBE_OMEGA,
    DEFAULT_OMEGA_MAX,
)
from sea_mtt.core.model import ControllerParams, LoadCase, SeaParams
from sea_mtt.core.mtt import (
    FrequencyGrid,
    mtt_arrays,
    mtt_dc_limit,
    mtt_tau_at,
    mtt_v_at,
    mtt_v_dc_limit,
)
from sea_mtt.exceptions import InvalidParams, SeaMttError

logger = logging.getLogger("sea-mtt.analysis")


class BandwidthKind(str, Enum):
    """Regime of a bandwidth value."""

    ZERO = "zero"
    FINITE = "finite"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Bandwidth:
    """A bandwidth in rad/s, or one of the distinguished values Zero / Unbounded.

    ``crossings`` counts the sign changes of MTT − 1 found on the search grid;
    only the lowest crossing is reported as ``omega``.
    """

    kind: BandwidthKind
    omega: Optional[float] = None
    crossings: int = 0

    @classmethod
    def zero(cls, crossings: int = 0) -> "Bandwidth":
        return cls(BandwidthKind.ZERO, None, crossings)

    @classmethod
    def finite(cls, omega: float, crossings: int = 0) -> "Bandwidth":
        return cls(BandwidthKind.FINITE, float(omega), crossings)

    @classmethod
    def unbounded(cls, crossings: int = 0) -> "Bandwidth":
        return cls(BandwidthKind.UNBOUNDED, None, crossings)

    @property
    def is_zero(self) -> bool:
        return self.kind is BandwidthKind.ZERO

    @property
    def is_finite(self) -> bool:
        return self.kind is BandwidthKind.FINITE

    @property
    def is_unbounded(self) -> bool:
        return self.kind is BandwidthKind.UNBOUNDED

    @property
    def hz(self) -> Optional[float]:
        return None if self.omega is None else self.omega / (2.0 * math.pi)

    def sort_key(self) -> tuple[int, float]:
        """Zero < any finite value < Unbounded."""
        if self.is_zero:
            return (0, 0.0)
        if self.is_finite:
            return (1, self.omega)
        return (2, 0.0)

    def as_number(self, ceiling: float = DEFAULT_OMEGA_MAX) -> float:
        """Numeric rendering: Zero → 0, Unbounded → ``ceiling``."""
        if self.is_zero:
            return 0.0
        if self.is_unbounded:
            return float(ceiling)
        return self.omega

    def describe(self, ceiling: Optional[float] = None) -> str:
        if self.is_zero:
            return "zero (DC-limited)"
        if self.is_unbounded:
            return f"unbounded (> {ceiling:g} rad/s)" if ceiling else "unbounded"
        return f"{self.omega:.6g} rad/s ({self.hz:.6g} Hz)"


class Binding(str, Enum):
    """Which MTT channel sets the combined bandwidth."""

    TORQUE = "torque"
    VELOCITY = "velocity"
    NEITHER = "neither"


@dataclass(frozen=True)
class BandwidthReport:
    """Torque, velocity and combined maximum-torque bandwidths."""

    omega_mt_tau: Bandwidth
    omega_mt_v: Bandwidth
    omega_mt: Bandwidth
    binding: Binding

    @classmethod
    def combine(cls, omega_mt_tau: Bandwidth, omega_mt_v: Bandwidth) -> "BandwidthReport":
        """Take the more critical (smaller) of the two bandwidths; ties go to torque."""
        if omega_mt_tau.is_unbounded and omega_mt_v.is_unbounded:
            return cls(omega_mt_tau, omega_mt_v, Bandwidth.unbounded(), Binding.NEITHER)
        if omega_mt_tau.sort_key() <= omega_mt_v.sort_key():
            return cls(omega_mt_tau, omega_mt_v, omega_mt_tau, Binding.TORQUE)
        return cls(omega_mt_tau, omega_mt_v, omega_mt_v, Binding.VELOCITY)


def _sign_changes(g: np.ndarray) -> int:
    finite = g[np.isfinite(g)]
    s = np.sign(finite - CRITICAL_LEVEL)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _solve_crossing(fn: Callable[[float], float], lo: float, hi: float) -> float:
    root, result = bisect(
        lambda w: fn(w) - CRITICAL_LEVEL,
        lo,
        hi,
        xtol=BISECT_XTOL,
        rtol=BISECT_RTOL,
        maxiter=BISECT_MAXITER,
        full_output=True,
        disp=False,
    )
    if not result.converged:
        logger.warning(
            "Bisection did not converge on [%g, %g] after %d iterations (%s)",
            lo,
            hi,
            result.iterations,
            result.flag,
        )
    return float(root)


def channel_bandwidth(
    fn: Callable[[float], float],
    samples: np.ndarray,
    omegas: np.ndarray,
    dc_value: float,
) -> Bandwidth:
    """Lowest frequency where one MTT channel reaches 1.

    ``samples`` are the channel magnitudes on ``omegas``; ``fn`` evaluates
    the same channel at a single frequency for the bisection.
    """
    crossings = _sign_changes(samples)
    if dc_value > CRITICAL_LEVEL:
        return Bandwidth.zero(crossings)

    g = samples - CRITICAL_LEVEL
    # samples sitting on a pole are nan; bracket across them
    idx = np.flatnonzero(np.isfinite(g))
    if idx.size == 0:
        return Bandwidth.unbounded(crossings)

    first = idx[0]
    if g[first] > 0:
        # above 1 at the bottom of the grid although the DC limit is not
        lo = min(DC_PROBE_OMEGA, omegas[first] * 1e-6)
        if fn(lo) < CRITICAL_LEVEL:
            return Bandwidth.finite(_solve_crossing(fn, lo, float(omegas[first])), crossings + 1)
        logger.debug("MTT above 1 down to %g rad/s with DC limit %g", lo, dc_value)
        return Bandwidth.zero(crossings)

    for i, j in zip(idx[:-1], idx[1:]):
        a, b = g[i], g[j]
        if a == 0:
            return Bandwidth.finite(omegas[i], crossings)
        if a * b < 0:
            return Bandwidth.finite(_solve_crossing(fn, float(omegas[i]), float(omegas[j])), crossings)
    if g[idx[-1]] == 0:
        return Bandwidth.finite(omegas[idx[-1]], crossings)
    return Bandwidth.unbounded(crossings)


def bandwidth(
    p: SeaParams,
    c: ControllerParams,
    search: Optional[FrequencyGrid] = None,
) -> BandwidthReport:
    """Find ω_MT_τ, ω_MT_V and their minimum ω_MT over the search grid."""
    search = search or FrequencyGrid()
    omegas = search.omegas()
    tau, vel = mtt_arrays(p, c, omegas)

    omega_mt_tau = channel_bandwidth(
        lambda w: mtt_tau_at(p, c, w), tau, omegas, mtt_dc_limit(p, c)
    )
    omega_mt_v = channel_bandwidth(lambda w: mtt_v_at(p, c, w), vel, omegas, mtt_v_dc_limit(p, c))
    report = BandwidthReport.combine(omega_mt_tau, omega_mt_v)
    logger.debug(
        "Bandwidth: tau=%s v=%s binding=%s",
        omega_mt_tau.describe(search.omega_max),
        omega_mt_v.describe(search.omega_max),
        report.binding.value,
    )
    return report


class SweepParam(str, Enum):
    """Design parameters a sweep can vary."""

    KP = "kp"
    KD = "kd"
    NM = "nm"
    KS = "ks"
    JL = "jl"


@dataclass(frozen=True)
class SweepEntry:
    """One sweep row: the swept value and its report, or the error it raised."""

    value: Optional[float]
    report: Optional[BandwidthReport] = None
    error: Optional[str] = None
    load_case: LoadCase = LoadCase.DYNAMIC

    @property
    def ok(self) -> bool:
        return self.report is not None


def apply_sweep_value(
    p: SeaParams, c: ControllerParams, param: SweepParam, value: float
) -> tuple[SeaParams, ControllerParams]:
    """Return copies of (p, c) with one design parameter replaced."""
    param = SweepParam(param)
    if param is SweepParam.KP:
        return p, c.with_changes(k_p=value)
    if param is SweepParam.KD:
        return p, c.with_changes(k_d=value)
    if param is SweepParam.NM:
        return p.with_changes(n_m=value), c
    if param is SweepParam.KS:
        return p.with_changes(k_s=value), c
    # a load inertia only exists for a free load
    return p.with_changes(j_l=value, load_case=LoadCase.DYNAMIC), c


def sweep(
    p: SeaParams,
    c: ControllerParams,
    param: SweepParam,
    values: Iterable[float],
    search: Optional[FrequencyGrid] = None,
    workers: int = 1,
    include_static: bool = False,
) -> list[SweepEntry]:
    """Evaluate :func:`bandwidth` for each value of one design parameter.

    Invalid values are reported on their own entry without aborting the sweep.
    Results keep the input order regardless of ``workers``.
    """
    param = SweepParam(param)
    search = search or FrequencyGrid()
    case = LoadCase.DYNAMIC if param is SweepParam.JL else p.load_case

    def evaluate(value: float) -> SweepEntry:
        try:
            sp, sc = apply_sweep_value(p, c, param, value)
            return SweepEntry(value=value, report=bandwidth(sp, sc, search), load_case=case)
        except InvalidParams as e:
            logger.warning("Sweep %s=%g rejected: %s", param.value, value, e)
            return SweepEntry(value=value, error=str(e), load_case=case)
        except SeaMttError as e:
            logger.warning("Sweep %s=%g failed: %s", param.value, value, e)
            return SweepEntry(value=value, error=str(e), load_case=case)

    values = [float(v) for v in values]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(evaluate, values))
    else:
        entries = [evaluate(v) for v in values]

    if include_static:
        static = p.with_changes(load_case=LoadCase.STATIC)
        entries.append(
            SweepEntry(value=None, report=bandwidth(static, c, search), load_case=LoadCase.STATIC)
        )
    return entries


def find_cliff(
    entries: list[SweepEntry],
    drop_ratio: float = 0.5,
    ceiling: float = DEFAULT_OMEGA_MAX,
) -> Optional[float]:
    """First swept value whose ω_MT_τ falls below ``drop_ratio`` × the running maximum.

    Entries without a report or without a swept value are ignored. Returns
    ``None`` when the bandwidth never collapses.
    """
    if not 0 < drop_ratio < 1:
        raise ValueError(f"drop_ratio must be in (0, 1), got {drop_ratio}")
    peak = 0.0
    for entry in entries:
        if not entry.ok or entry.value is None:
            continue
        bw = entry.report.omega_mt_tau.as_number(ceiling)
        if peak > 0 and bw < drop_ratio * peak:
            return entry.value
        peak = max(peak, bw)
    return None
