"""
Maximum-torque bandwidth command.
"""

from typing import Any, Optional

import click

from sea_mtt.commands.common import config_option, exit_on_error, load_config
from sea_mtt.core.bandwidth import Bandwidth, BandwidthReport, bandwidth
from sea_mtt.core.mtt import marginal_gain, mtt_dc_limit
from sea_mtt.exceptions import StaticCaseUnsupported
from sea_mtt.utils.output import print_fields, print_json, print_table


def bandwidth_to_dict(bw: Bandwidth) -> dict[str, Any]:
    return {
        "kind": bw.kind.value,
        "rad_s": bw.omega,
        "hz": bw.hz,
        "crossings": bw.crossings,
    }


def report_to_dict(
    report: BandwidthReport, margin: Optional[float], dc_limit: float, omega_max: float
) -> dict[str, Any]:
    return {
        "omega_mt_tau": bandwidth_to_dict(report.omega_mt_tau),
        "omega_mt_v": bandwidth_to_dict(report.omega_mt_v),
        "omega_mt": bandwidth_to_dict(report.omega_mt),
        "binding": report.binding.value,
        "marginal_gain": margin,
        "dc_mtt_tau": dc_limit,
        "search_omega_max": omega_max,
    }


@click.command(name="bandwidth")
@config_option
@click.option("--json", "as_json", is_flag=True, help="Print a machine-readable report")
@click.pass_context
def bandwidth_cmd(ctx, config_path, as_json):
    """Report the torque, velocity and combined maximum-torque bandwidths.

    Example: sea-mtt bandwidth --config sea.json
    """
    with exit_on_error(ctx):
        cfg = load_config(config_path)
        params = cfg.to_params()
        controller = cfg.to_controller()
        report = bandwidth(params, controller, cfg.to_grid())
        try:
            margin = marginal_gain(params)
        except StaticCaseUnsupported:
            margin = None
        dc_limit = mtt_dc_limit(params, controller)

        if as_json:
            print_json(report_to_dict(report, margin, dc_limit, cfg.grid.omega_max))
            return

        omega_max = cfg.grid.omega_max
        rows = [
            ["omega_MT_tau", report.omega_mt_tau.describe(omega_max), report.omega_mt_tau.crossings],
            ["omega_MT_V", report.omega_mt_v.describe(omega_max), report.omega_mt_v.crossings],
            ["omega_MT", report.omega_mt.describe(omega_max), ""],
        ]
        print_table(
            ["Bandwidth", "Value", "Grid crossings"],
            rows,
            title=f"Maximum torque bandwidth ({params.load_case.value} load)",
        )
        if margin is None:
            margin_text = "n/a (static)"
        else:
            margin_text = f"{margin:.6g} (K_p = {controller.k_p:g})"
        print_fields(
            [
                ("Binding factor", f"[bold]{report.binding.value}[/bold]"),
                ("DC MTT_tau", f"{dc_limit:.6g}"),
                ("Marginal gain", margin_text),
            ]
        )
