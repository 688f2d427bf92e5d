"""Core functionality modules."""

from sea_mtt.core.bandwidth import (
    Bandwidth,
    BandwidthReport,
    Binding,
    SweepEntry,
    SweepParam,
    bandwidth,
    find_cliff,
    sweep,
)
from sea_mtt.core.lti import Polynomial, RationalTF, eval_jw, feedback
from sea_mtt.core.model import (
    ControllerParams,
    LoadCase,
    SeaParams,
    SeaPlantSet,
    build_plants,
    closed_loop_tc,
    closed_loop_vm,
)
from sea_mtt.core.mtt import (
    FrequencyGrid,
    Limiting,
    MttCurve,
    marginal_gain,
    mtt_curve,
    mtt_dc_limit,
    mtt_tau_at,
    mtt_v_at,
)
from sea_mtt.core.sim import Chirp, SimConfig, SimState, SimTrace, Sine, run, step
from sea_mtt.core.verify import Verifier, VerificationReport

__all__ = [
    "Bandwidth",
    "BandwidthReport",
    "Binding",
    "SweepEntry",
    "SweepParam",
    "bandwidth",
    "find_cliff",
    "sweep",
    "Polynomial",
    "RationalTF",
    "eval_jw",
    "feedback",
    "ControllerParams",
    "LoadCase",
    "SeaParams",
    "SeaPlantSet",
    "build_plants",
    "closed_loop_tc",
    "closed_loop_vm",
    "FrequencyGrid",
    "Limiting",
    "MttCurve",
    "marginal_gain",
    "mtt_curve",
    "mtt_dc_limit",
    "mtt_tau_at",
    "mtt_v_at",
    "Chirp",
    "SimConfig",
    "SimState",
    "SimTrace",
    "Sine",
    "run",
    "step",
    "Verifier",
    "VerificationReport",
]
