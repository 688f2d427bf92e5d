"""
Main CLI entry point for SEA MTT.
"""

import click

from sea_mtt import __version__
from sea_mtt.commands.analyze import analyze_cmd
from sea_mtt.commands.bandwidth import bandwidth_cmd
from sea_mtt.commands.config import config_cli
from sea_mtt.commands.simulate import simulate_cmd
from sea_mtt.commands.sweep import sweep_cmd
from sea_mtt.commands.verify import verify_cmd
from sea_mtt.utils.log import setup_logging
from sea_mtt.utils.output import console


@click.group()
@click.version_option(version=__version__, prog_name="sea-mtt")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr")
@click.pass_context
def main(ctx, verbose):
    """SEA MTT - maximum torque transmissibility of series elastic actuators.

    Computes the torque- and velocity-based MTT curves of an SEA, the
    maximum-torque bandwidths, parameter sweeps, and cross-checks them
    against a nonlinear simulation with motor limits.
    """
    setup_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose


main.add_command(analyze_cmd)
main.add_command(bandwidth_cmd)
main.add_command(sweep_cmd)
main.add_command(simulate_cmd)
main.add_command(verify_cmd)
main.add_command(config_cli)


@main.command()
def version():
    """Show version information."""
    console.print(f"[bold cyan]SEA MTT[/bold cyan] version [yellow]{__version__}[/yellow]")


if __name__ == "__main__":
    main()
