"""
Constants and default values for SEA MTT.
"""

from pathlib import Path

# Version
__version__ = "0.1.0"

# Default paths
DEFAULT_CONFIG_DIR = Path.home() / ".config" / "sea-mtt"
DEFAULT_CONFIG_FILE = DEFAULT_CONFIG_DIR / "config.json"

# Identified system parameters (VGT test bench)
DEFAULT_JM = 0.000075  # kg·m²
DEFAULT_JL = 0.005  # kg·m²
DEFAULT_BM = 0.0006  # N·m·s/rad
DEFAULT_BL = 0.08  # N·m·s/rad
DEFAULT_KS = 1.1  # N·m/rad
DEFAULT_TMC = 0.0315  # N·m
DEFAULT_VP = 10.472  # rad/s

# Design-study defaults
DEFAULT_NM = 8.0
DEFAULT_KP = 0.8
DEFAULT_KD = 0.05  # s

# Load cases
LOAD_DYNAMIC = "dynamic"
LOAD_STATIC = "static"

# Frequency grid defaults (rad/s)
DEFAULT_OMEGA_MIN = 1e-2
DEFAULT_OMEGA_MAX = 1e3
DEFAULT_GRID_POINTS = 2000

# Bandwidth search
CRITICAL_LEVEL = 1.0  # 0 dB
BISECT_RTOL = 1e-6
BISECT_XTOL = 1e-12
BISECT_MAXITER = 200
DC_PROBE_OMEGA = 1e-6

# Simulation defaults
DEFAULT_DT = 1e-4  # s
DEFAULT_DERATE_BAND = 0.05  # fraction of V_p
DEFAULT_SIM_CYCLES = 20
MIN_SIM_CYCLES = 10
DEFAULT_LAST_CYCLES = 5
BLOWUP_LIMIT = 1e12
RK4_STABILITY_MARGIN = 2.5

# Verification battery
VERIFY_FREQUENCIES = [1.0, 5.0, 10.0, 20.0, 40.0]  # rad/s
VERIFY_TOLERANCE = 0.02
VERIFY_AMP_SCALE = 0.1
VERIFY_MIN_DURATION = 6.0  # s
VERIFY_LAST_CYCLES = 3
VERIFY_DC_TOLERANCE = 1e-3
VERIFY_STATIC_SCALE = 1e6
VERIFY_CONVERGENCE_TOL = 1e-6
VERIFY_ASSEMBLY_TOL = 1e-9

# Output formatting
CSV_SIGNIFICANT_DIGITS = 9

# Limiting factors
LIMIT_TORQUE = "torque"
LIMIT_VELOCITY = "velocity"
LIMIT_NONE = "none"

# Exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NUMERICAL_ERROR = 3
