"""
Maximum torque transmissibility (MTT) evaluation.

MTT_τ is the motor torque needed to deliver the maximum SEA torque
(N_m · T_m.c) normalized by T_m.c; MTT_V is the motor velocity needed for the
same delivery normalized by V_p. Both are magnitudes at s = jω of the
closed-loop transfers built in :mod:`sea_mtt.core.model`.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from sea_mtt.constants import (
    CRITICAL_LEVEL,
    DEFAULT_GRID_POINTS,
    DEFAULT_OMEGA_MAX,
    DEFAULT_OMEGA_MIN,
    LIMIT_NONE,
    LIMIT_TORQUE,
    LIMIT_VELOCITY,
)
from sea_mtt.core.lti import RationalTF, eval_jw, freqresp
from sea_mtt.core.model import (
    ControllerParams,
    SeaParams,
    build_plants,
    closed_loop_tc,
    closed_loop_vm,
)
from sea_mtt.exceptions import InvalidParams, StaticCaseUnsupported

logger = logging.getLogger("sea-mtt.analysis")


class Limiting(str, Enum):
    """Which motor limit, if any, is exceeded at a frequency."""

    TORQUE = LIMIT_TORQUE
    VELOCITY = LIMIT_VELOCITY
    NONE = LIMIT_NONE


@dataclass(frozen=True)
class FrequencyGrid:
    """Log-spaced frequency grid in rad/s."""

    omega_min: float = DEFAULT_OMEGA_MIN
    omega_max: float = DEFAULT_OMEGA_MAX
    points: int = DEFAULT_GRID_POINTS
    spacing: str = "log"

    def __post_init__(self) -> None:
        if not (0 < self.omega_min < self.omega_max) or not math.isfinite(self.omega_max):
            raise InvalidParams(
                "grid", f"need 0 < omega_min < omega_max, got [{self.omega_min}, {self.omega_max}]"
            )
        if self.points < 2:
            raise InvalidParams("grid.points", f"must be >= 2, got {self.points}")
        if self.spacing != "log":
            raise InvalidParams("grid.spacing", f"only 'log' spacing is supported, got {self.spacing!r}")

    def omegas(self) -> np.ndarray:
        return np.logspace(math.log10(self.omega_min), math.log10(self.omega_max), self.points)


@dataclass
class MttCurve:
    """MTT magnitudes sampled over a frequency grid."""

    omega: list[float] = field(default_factory=list)
    mtt_tau: list[float] = field(default_factory=list)
    mtt_v: list[float] = field(default_factory=list)
    limiting: list[Limiting] = field(default_factory=list)
    # (omega, reason) for samples dropped because they sit on a pole
    skipped: list[tuple[float, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.omega)


def classify(mtt_tau: float, mtt_v: float) -> Limiting:
    """Label the limiting factor of one sample."""
    if mtt_tau >= mtt_v and mtt_tau > CRITICAL_LEVEL:
        return Limiting.TORQUE
    if mtt_v > mtt_tau and mtt_v > CRITICAL_LEVEL:
        return Limiting.VELOCITY
    return Limiting.NONE


@lru_cache(maxsize=256)
def closed_loop_pair(p: SeaParams, c: ControllerParams) -> tuple[RationalTF, RationalTF]:
    """(T_c, V_m) closed-loop transfers for one parameter set."""
    plants = build_plants(p, c)
    return closed_loop_tc(plants, p.n_m), closed_loop_vm(plants, p.n_m)


def _velocity_scale(p: SeaParams) -> float:
    # MTT_V = |V_m(jω)| · N_m·T_m.c / V_p
    return p.n_m * p.t_mc / p.v_p


def mtt_tau_at(p: SeaParams, c: ControllerParams, omega: float) -> float:
    """MTT_τ(ω) = N_m · |T_c(jω)|. ω = 0 returns the closed-form DC limit."""
    if omega < 0:
        raise ValueError(f"omega must be non-negative, got {omega}")
    if omega == 0:
        return mtt_dc_limit(p, c)
    tc, _ = closed_loop_pair(p, c)
    return abs(eval_jw(tc, omega)) * p.n_m


def mtt_v_at(p: SeaParams, c: ControllerParams, omega: float) -> float:
    """MTT_V(ω) = N_m · T_m.c / V_p · |V_m(jω)|. ω = 0 returns the DC limit."""
    if omega < 0:
        raise ValueError(f"omega must be non-negative, got {omega}")
    if omega == 0:
        return mtt_v_dc_limit(p, c)
    _, vm = closed_loop_pair(p, c)
    return abs(eval_jw(vm, omega)) * _velocity_scale(p)


def mtt_arrays(p: SeaParams, c: ControllerParams, omegas) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized MTT_τ and MTT_V; samples on a pole come back as ``nan``."""
    tc, vm = closed_loop_pair(p, c)
    tau = np.abs(freqresp(tc, omegas)) * p.n_m
    vel = np.abs(freqresp(vm, omegas)) * _velocity_scale(p)
    return tau, vel


def mtt_dc_limit(p: SeaParams, c: ControllerParams) -> float:
    """Closed-form ω → 0 value of MTT_τ. The derivative gain does not enter."""
    if p.is_static:
        return c.k_p / (1.0 + c.k_p)
    reflected_bl = p.b_l / (p.n_m * p.n_m)
    return c.k_p * (p.b_m + reflected_bl) / (p.b_m + (1.0 + c.k_p) * reflected_bl)


def mtt_v_dc_limit(p: SeaParams, c: ControllerParams) -> float:
    """Closed-form ω → 0 value of MTT_V (zero for a fixed load)."""
    if p.is_static:
        return 0.0
    reflected_bl = p.b_l / (p.n_m * p.n_m)
    return c.k_p * (p.t_mc / p.v_p) / (p.b_m + (1.0 + c.k_p) * reflected_bl)


def marginal_gain(p: SeaParams) -> float:
    """Proportional gain at which the DC MTT_τ reaches 1: 1 + N_m⁻² B_l / B_m.

    Raises:
        StaticCaseUnsupported: the static DC limit K_p/(1+K_p) never reaches 1.
    """
    if p.is_static:
        raise StaticCaseUnsupported(
            "No marginal gain in the static load case: DC MTT is K_p/(1+K_p) < 1"
        )
    return 1.0 + p.b_l / (p.n_m * p.n_m * p.b_m)


def mtt_curve(p: SeaParams, c: ControllerParams, grid: FrequencyGrid) -> MttCurve:
    """Sample MTT_τ and MTT_V on the grid and label the limiting factor."""
    omegas = grid.omegas()
    tau, vel = mtt_arrays(p, c, omegas)

    curve = MttCurve()
    for w, mt, mv in zip(omegas, tau, vel):
        if not (math.isfinite(mt) and math.isfinite(mv)):
            reason = f"pole at omega = {w:g} rad/s"
            logger.warning("Skipping MTT sample: %s", reason)
            curve.skipped.append((float(w), reason))
            continue
        curve.omega.append(float(w))
        curve.mtt_tau.append(float(mt))
        curve.mtt_v.append(float(mv))
        curve.limiting.append(classify(float(mt), float(mv)))

    logger.debug(
        "MTT curve: %d samples on [%g, %g] rad/s, %d skipped",
        len(curve),
        grid.omega_min,
        grid.omega_max,
        len(curve.skipped),
    )
    return curve
