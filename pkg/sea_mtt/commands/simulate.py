"""
Time-domain simulation command.
"""

from pathlib import Path

import click

from sea_mtt.commands.common import config_option, exit_on_error, load_config
from sea_mtt.constants import DEFAULT_LAST_CYCLES
from sea_mtt.core.model import max_output_torque
from sea_mtt.core.mtt import mtt_tau_at, mtt_v_at
from sea_mtt.core.sim import (
    Chirp,
    SimConfig,
    Sine,
    SimTrace,
    run,
    steady_state_peak,
    tracking_error,
)
from sea_mtt.utils.csvio import CsvTable
from sea_mtt.utils.output import Spinner, console, print_table, success

TRACE_HEADER = ["t_s"] + list(SimTrace.CHANNELS)


def trace_table(trace: SimTrace) -> CsvTable:
    table = CsvTable(list(TRACE_HEADER))
    columns = [trace.t] + [trace.channel(name) for name in SimTrace.CHANNELS]
    for row in zip(*columns):
        table.rows.append([float(v) for v in row])
    return table


@click.command(name="simulate")
@config_option
@click.option(
    "--freq", "-f", type=click.FloatRange(min=0, min_open=True), help="Sine frequency [rad/s]"
)
@click.option(
    "--chirp",
    nargs=2,
    type=click.FloatRange(min=0),
    default=None,
    help="Linear chirp from F0 to F1 [rad/s] instead of a sine",
)
@click.option(
    "--amp-scale",
    default=1.0,
    show_default=True,
    type=click.FloatRange(min=0, min_open=True),
    help="Amplitude as a fraction of N_m * T_m.c",
)
@click.option("--duration", "-d", type=click.FloatRange(min=0, min_open=True), help="Run length [s]")
@click.option(
    "--limits/--no-limits", default=True, show_default=True, help="Motor torque and velocity limits"
)
@click.option(
    "--last-cycles", default=DEFAULT_LAST_CYCLES, show_default=True, type=click.IntRange(min=1)
)
@click.option(
    "--out", "-o", required=True, type=click.Path(dir_okay=False, path_type=Path), help="CSV output file"
)
@click.pass_context
def simulate_cmd(ctx, config_path, freq, chirp, amp_scale, duration, limits, last_cycles, out):
    """Run the nonlinear closed-loop simulation and summarize tracking.

    Example: sea-mtt simulate --freq 31.4 --amp-scale 0.6 --out run.csv
    """
    if (freq is None) == (chirp is None):
        raise click.UsageError("Give exactly one of --freq or --chirp")

    with exit_on_error(ctx):
        cfg = load_config(config_path)
        params = cfg.to_params()
        controller = cfg.to_controller()
        amplitude = amp_scale * max_output_torque(params)
        duration = duration or cfg.sim.duration

        if chirp is not None:
            f0, f1 = chirp
            if duration is None:
                raise click.UsageError("--chirp needs --duration (or sim.duration in the config)")
            reference = Chirp(f0=f0, f1=f1, duration=duration, amplitude=amplitude)
        else:
            reference = Sine(freq=freq, amplitude=amplitude)

        sim_cfg = SimConfig(
            params=params,
            controller=controller,
            reference=reference,
            dt=cfg.sim.dt,
            duration=duration,
            limits_enabled=limits,
            derate_band=cfg.sim.derate_band,
        )
        with Spinner(f"Simulating {sim_cfg.duration:g} s at dt = {sim_cfg.dt:g} s..."):
            trace = run(sim_cfg)

        table = trace_table(trace)
        table.write(out)
        success(f"Wrote {len(table.rows)} samples to {out}")

        if chirp is not None:
            err = tracking_error(trace, params, amplitude)
            rows = [
                ["peak norm_torque", f"{float(trace.norm_torque.max()):.4g}", ""],
                ["peak norm_vel", f"{float(trace.norm_vel.max()):.4g}", ""],
            ]
        else:
            err = tracking_error(trace, params, amplitude, last_cycles, freq)
            rows = [
                [
                    "peak norm_torque",
                    f"{steady_state_peak(trace, 'norm_torque', last_cycles, freq):.4g}",
                    f"{mtt_tau_at(params, controller, freq) * amp_scale:.4g}",
                ],
                [
                    "peak norm_vel",
                    f"{steady_state_peak(trace, 'norm_vel', last_cycles, freq):.4g}",
                    f"{mtt_v_at(params, controller, freq) * amp_scale:.4g}",
                ],
            ]
        rows += [
            ["peak tracking error / amplitude", f"{err.peak_norm_amp:.4g}", ""],
            ["RMS tracking error / amplitude", f"{err.rms_norm_amp:.4g}", ""],
            ["peak tracking error / (N_m T_m.c)", f"{err.peak_norm_max:.4g}", ""],
        ]
        window = "whole run" if chirp is not None else f"last {last_cycles} cycles"
        print_table(["Quantity", "Simulated", "MTT prediction"], rows, title=f"Summary ({window})")
        if limits:
            console.print(f"[dim]Velocity derating band: {cfg.sim.derate_band:g} x V_p[/dim]")
