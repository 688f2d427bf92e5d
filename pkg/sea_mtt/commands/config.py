"""
Configuration management commands for the CLI.
"""

from pathlib import Path

import click

from sea_mtt.commands.common import config_option, exit_on_error, load_config
from sea_mtt.config import SeaConfig
from sea_mtt.constants import DEFAULT_CONFIG_FILE
from sea_mtt.core.mtt import marginal_gain
from sea_mtt.exceptions import StaticCaseUnsupported
from sea_mtt.utils.output import console, info, print_fields, success


@click.group(name="config")
def config_cli():
    """Manage parameter files."""
    pass


@config_cli.command()
@config_option
@click.pass_context
def show(ctx, config_path):
    """Show the resolved parameters."""
    with exit_on_error(ctx):
        cfg = load_config(config_path)
        params = cfg.to_params()

    console.print("\n[bold cyan]SEA MTT Configuration[/bold cyan]")
    console.print(f"Config file: {config_path or '(bundled defaults)'}")
    console.print()

    print_fields(
        [
            ("J_m", f"{cfg.jm:g} kg·m²"),
            ("J_l", f"{cfg.jl:g} kg·m²"),
            ("B_m", f"{cfg.bm:g} N·m·s/rad"),
            ("B_l", f"{cfg.bl:g} N·m·s/rad"),
            ("K_s", f"{cfg.ks:g} N·m/rad"),
            ("N_m", f"{cfg.nm:g}"),
            ("Load case", cfg.load_case),
        ],
        title="Mechanics",
    )
    console.print()

    print_fields(
        [
            ("T_m.c", f"{cfg.tmc:g} N·m"),
            ("V_p", f"{cfg.vp:g} rad/s"),
            ("Max torque", f"{cfg.nm * cfg.tmc:g} N·m"),
        ],
        title="Motor limits",
    )
    console.print()

    try:
        margin = f"{marginal_gain(params):.6g}"
    except StaticCaseUnsupported:
        margin = "n/a (static)"
    print_fields(
        [("K_p", f"{cfg.kp:g}"), ("K_d", f"{cfg.kd:g} s"), ("Marginal K_p", margin)],
        title="Controller",
    )
    console.print()

    duration = "20 reference periods" if cfg.sim.duration is None else f"{cfg.sim.duration:g} s"
    grid = (
        f"[{cfg.grid.omega_min:g}, {cfg.grid.omega_max:g}] rad/s, "
        f"{cfg.grid.points} points (log)"
    )
    print_fields(
        [
            ("Grid", grid),
            ("dt", f"{cfg.sim.dt:g} s"),
            ("Duration", duration),
            ("Derate band", f"{cfg.sim.derate_band:g} x V_p"),
        ],
        title="Grid / simulation",
    )
    console.print()


@config_cli.command()
@click.option(
    "--path",
    "-p",
    type=click.Path(dir_okay=False, path_type=Path),
    default=DEFAULT_CONFIG_FILE,
    show_default=True,
    help="Where to write the parameter file",
)
@click.option("--force", is_flag=True, help="Overwrite an existing file")
def init(path, force):
    """Write the default parameters to a file."""
    if path.exists() and not force:
        if not click.confirm(f"Config file exists at {path}. Overwrite?"):
            info("Operation cancelled.")
            return

    SeaConfig().save(path)
    success(f"Configuration initialized at {path}")
    info("Edit the file to customize your parameters")
