"""
SEA plant and closed-loop transfer functions.

Builds the two-mass SEA model (motor and load coupled through the spring),
the open-loop transmissibility for the dynamic and static load cases, the
motor-velocity transfer function, and the closed-loop transfers from the
desired torque to the control input and to the motor velocity under
force feedback ``C(s) = K_p + K_d s``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np

from sea_mtt.constants import LOAD_DYNAMIC, LOAD_STATIC
from sea_mtt.core.lti import Polynomial, RationalTF, feedback
from sea_mtt.exceptions import InvalidParams


class LoadCase(str, Enum):
    """Environment the SEA output is connected to."""

    DYNAMIC = LOAD_DYNAMIC
    STATIC = LOAD_STATIC


def _require_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0:
        raise InvalidParams(name, f"must be a finite value > 0, got {value!r}")


def _require_non_negative(name: str, value: float) -> None:
    if not math.isfinite(value) or value < 0:
        raise InvalidParams(name, f"must be a finite value >= 0, got {value!r}")


@dataclass(frozen=True)
class SeaParams:
    """Mechanical, load and motor-limit parameters of an SEA.

    Damping values are rotational (N·m·s/rad). ``n_m`` is the total
    motor-to-spring reduction ratio. ``j_l`` and ``b_l`` are ignored in the
    static load case.
    """

    j_m: float
    j_l: float
    b_m: float
    b_l: float
    k_s: float
    n_m: float
    t_mc: float
    v_p: float
    load_case: LoadCase = LoadCase.DYNAMIC

    def __post_init__(self) -> None:
        object.__setattr__(self, "load_case", LoadCase(self.load_case))
        for name in ("j_m", "b_m", "k_s", "n_m", "t_mc", "v_p"):
            _require_positive(name, getattr(self, name))
        if self.load_case is LoadCase.DYNAMIC:
            _require_positive("j_l", self.j_l)
            # a free load without damping is a valid limit (marginal gain of 1)
            _require_non_negative("b_l", self.b_l)

    @property
    def is_static(self) -> bool:
        return self.load_case is LoadCase.STATIC

    def with_changes(self, **changes) -> "SeaParams":
        """Copy with some fields replaced; the copy is validated again."""
        return replace(self, **changes)


@dataclass(frozen=True)
class ControllerParams:
    """PD force-feedback gains. ``k_d = 0`` gives a pure P controller."""

    k_p: float
    k_d: float = 0.0

    def __post_init__(self) -> None:
        _require_positive("k_p", self.k_p)
        _require_non_negative("k_d", self.k_d)

    def with_changes(self, **changes) -> "ControllerParams":
        return replace(self, **changes)

    def transfer(self) -> RationalTF:
        """C(s) = K_p + K_d s."""
        return RationalTF.from_coeffs([self.k_p, self.k_d], [1.0])


@dataclass(frozen=True)
class SeaPlantSet:
    """Every open-loop transfer function of one parameter set."""

    params: SeaParams
    p_m: RationalTF
    p_out: RationalTF
    p_v: RationalTF
    c: RationalTF
    p_l: Optional[RationalTF] = field(default=None)


def _mass_damper(inertia: float, damping: float) -> RationalTF:
    """1 / (J s² + B s)."""
    return RationalTF.from_coeffs([1.0], [0.0, damping, inertia])


_S = RationalTF(Polynomial.s(), Polynomial([1.0]))


def build_plants(p: SeaParams, c: ControllerParams) -> SeaPlantSet:
    """Assemble P_m, P_l, the output transmissibility, P_V and C(s).

    Dynamic case:
        P   = N⁻¹ K_s P_m / (1 + K_s P_l + N⁻² K_s P_m)
        P_V = P_m (1 + K_s P_l) s / (1 + K_s P_l + N⁻² K_s P_m)
    Static case (J_l, B_l → ∞):
        P   = N⁻¹ K_s P_m / (1 + N⁻² K_s P_m)
        P_V = P_m s / (1 + N⁻² K_s P_m)
    """
    inv_n = 1.0 / p.n_m
    p_m = _mass_damper(p.j_m, p.b_m)
    reflected = p_m * (p.k_s * inv_n * inv_n)

    if p.is_static:
        p_l = None
        coupling = 1.0 + reflected
        motion = p_m * _S
    else:
        p_l = _mass_damper(p.j_l, p.b_l)
        spring_load = p_l * p.k_s
        coupling = 1.0 + spring_load + reflected
        motion = p_m * (1.0 + spring_load) * _S

    p_out = (p_m * (p.k_s * inv_n)) / coupling
    p_v = motion / coupling
    return SeaPlantSet(params=p, p_m=p_m, p_l=p_l, p_out=p_out, p_v=p_v, c=c.transfer())


def closed_loop_tc(plants: SeaPlantSet, n_m: float) -> RationalTF:
    """Transfer from desired torque to control input: N⁻¹C / (1 + N⁻¹C P)."""
    return feedback(plants.c / n_m, plants.p_out)


def closed_loop_vm(plants: SeaPlantSet, n_m: float) -> RationalTF:
    """Transfer from desired torque to motor velocity: P_V · T_c."""
    return plants.p_v * closed_loop_tc(plants, n_m)


def max_output_torque(p: SeaParams) -> float:
    """Largest torque the SEA can be expected to deliver: N_m · T_m.c."""
    return p.n_m * p.t_mc


def _pointwise_terms(p: SeaParams, c: ControllerParams, omega: np.ndarray):
    s = 1j * omega
    p_m = 1.0 / (p.j_m * s * s + p.b_m * s)
    ctrl = c.k_p + c.k_d * s
    if p.is_static:
        k_pl = np.zeros_like(s)
    else:
        k_pl = p.k_s / (p.j_l * s * s + p.b_l * s)
    reflected = p.k_s * p_m / (p.n_m * p.n_m)
    return s, p_m, ctrl, k_pl, reflected


def direct_mtt_tau(p: SeaParams, c: ControllerParams, omega) -> np.ndarray:
    """|[1 + K_s(P_l + N⁻²P_m)] C / (1 + K_s[P_l + N⁻²P_m(1 + C)])| evaluated pointwise.

    Independent of the rational-function assembly; the static case drops P_l.
    """
    w = np.asarray(omega, dtype=float)
    _, _, ctrl, k_pl, reflected = _pointwise_terms(p, c, w)
    value = (1.0 + k_pl + reflected) * ctrl / (1.0 + k_pl + reflected * (1.0 + ctrl))
    return np.abs(value)


def direct_mtt_v(p: SeaParams, c: ControllerParams, omega) -> np.ndarray:
    """|P_m C (1 + K_s P_l) s / (1 + K_s[P_l + N⁻²P_m(1 + C)])| · T_m.c / V_p, pointwise."""
    w = np.asarray(omega, dtype=float)
    s, p_m, ctrl, k_pl, reflected = _pointwise_terms(p, c, w)
    value = p_m * ctrl * (1.0 + k_pl) * s / (1.0 + k_pl + reflected * (1.0 + ctrl))
    return np.abs(value) * p.t_mc / p.v_p


def plant_magnitude(p: SeaParams, omega) -> np.ndarray:
    """Open-loop transmissibility |P(jω)| / N_m (1 at DC in the static case)."""
    w = np.asarray(omega, dtype=float)
    _, p_m, _, k_pl, reflected = _pointwise_terms(p, ControllerParams(k_p=1.0), w)
    value = p.k_s * p_m / p.n_m / (1.0 + k_pl + reflected)
    return np.abs(value) / p.n_m
