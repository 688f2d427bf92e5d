"""CLI command modules."""

from sea_mtt.commands.analyze import analyze_cmd
from sea_mtt.commands.bandwidth import bandwidth_cmd
from sea_mtt.commands.config import config_cli
from sea_mtt.commands.simulate import simulate_cmd
from sea_mtt.commands.sweep import sweep_cmd
from sea_mtt.commands.verify import verify_cmd

__all__ = [
    "analyze_cmd",
    "bandwidth_cmd",
    "config_cli",
    "simulate_cmd",
    "sweep_cmd",
    "verify_cmd",
]
