"""
Design-parameter sweep command.
"""

from pathlib import Path

import click
import numpy as np

from sea_mtt.commands.common import config_option, exit_on_error, load_config
from sea_mtt.core.bandwidth import SweepEntry, SweepParam, find_cliff, sweep
from sea_mtt.utils.csvio import CsvTable
from sea_mtt.utils.output import info, success, warning
from sea_mtt.utils.svg import Series, render_plot, write_plot

SWEEP_HEADER = [
    "param_value",
    "omega_mt_tau",
    "omega_mt_v",
    "omega_mt",
    "binding",
    "dc_limited",
    "dc_limited_v",
    "unbounded",
    "load_case",
]


def sweep_table(entries: list[SweepEntry], omega_max: float) -> CsvTable:
    """Zero renders as 0, Unbounded as omega_max.

    ``dc_limited`` flags a DC-limited torque channel (K_p above the marginal gain),
    ``dc_limited_v`` the velocity channel, ``unbounded`` an unbounded omega_mt.
    The fixed-load entry of a load-inertia sweep has no swept value and
    writes nan in ``param_value``.
    """
    table = CsvTable(list(SWEEP_HEADER))
    nan = float("nan")
    for entry in entries:
        value = nan if entry.value is None else entry.value
        case = entry.load_case.value
        if not entry.ok:
            table.add_row([value, nan, nan, nan, "invalid", 0, 0, 0, case])
            continue
        r = entry.report
        table.add_row(
            [
                value,
                r.omega_mt_tau.as_number(omega_max),
                r.omega_mt_v.as_number(omega_max),
                r.omega_mt.as_number(omega_max),
                r.binding,
                int(r.omega_mt_tau.is_zero),
                int(r.omega_mt_v.is_zero),
                int(r.omega_mt.is_unbounded),
                case,
            ]
        )
    return table


@click.command(name="sweep")
@config_option
@click.option(
    "--param",
    "-p",
    required=True,
    type=click.Choice([p.value for p in SweepParam]),
    help="Parameter to sweep",
)
@click.option("--from", "start", required=True, type=float, help="First value")
@click.option("--to", "stop", required=True, type=float, help="Last value")
@click.option("--points", "-n", default=20, show_default=True, type=click.IntRange(min=2))
@click.option("--log", "log_spacing", is_flag=True, help="Log-spaced values")
@click.option("--out", "-o", type=click.Path(dir_okay=False, path_type=Path), help="CSV output file")
@click.option("--svg", type=click.Path(dir_okay=False, path_type=Path), help="SVG plot output file")
@click.option("--workers", "-w", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--with-static", is_flag=True, help="Append the static-load entry (jl sweeps)")
@click.option(
    "--cliff-ratio",
    type=click.FloatRange(0, 1, min_open=True, max_open=True),
    default=None,
    help="Report the first value where omega_MT_tau drops below this fraction of its running maximum",
)
@click.pass_context
def sweep_cmd(
    ctx, config_path, param, start, stop, points, log_spacing, out, svg, workers, with_static, cliff_ratio
):
    """Evaluate the bandwidths while varying one design parameter.

    Example: sea-mtt sweep --param kp --from 0.1 --to 6 --points 60 --out kp.csv
    """
    if not start < stop:
        raise click.BadParameter("--from must be smaller than --to", param_hint="--from")
    if log_spacing and start <= 0:
        raise click.BadParameter("log spacing needs --from > 0", param_hint="--from")

    with exit_on_error(ctx):
        cfg = load_config(config_path)
        if log_spacing:
            values = np.logspace(np.log10(start), np.log10(stop), points)
        else:
            values = np.linspace(start, stop, points)

        entries = sweep(
            cfg.to_params(),
            cfg.to_controller(),
            SweepParam(param),
            values,
            search=cfg.to_grid(),
            workers=workers,
            include_static=with_static,
        )
        omega_max = cfg.grid.omega_max
        table = sweep_table(entries, omega_max)
        text = table.write(out)
        if out is None:
            click.echo(text, nl=False)
        else:
            success(f"Wrote {len(table.rows)} rows to {out}")

        rejected = [e for e in entries if not e.ok]
        for entry in rejected:
            warning(f"{param} = {entry.value:g}: {entry.error}")

        if cliff_ratio is not None:
            cliff = find_cliff(entries, cliff_ratio, omega_max)
            if cliff is None:
                info(f"No omega_MT_tau drop below {cliff_ratio:g} x running maximum")
            else:
                info(f"omega_MT_tau collapses at {param} = {cliff:g}")

        if svg:
            swept = [e for e in entries if e.ok and e.value is not None]
            xs = [e.value for e in swept]
            series = [
                Series(
                    "omega_MT_tau",
                    xs,
                    [e.report.omega_mt_tau.as_number(omega_max) for e in swept],
                    color="#c0392b",
                ),
                Series(
                    "omega_MT_V",
                    xs,
                    [e.report.omega_mt_v.as_number(omega_max) for e in swept],
                    color="#2c6fbb",
                    dashed=True,
                ),
            ]
            doc = render_plot(
                series,
                title=f"Maximum torque bandwidth vs {param}",
                x_label=param,
                y_label="bandwidth [rad/s]",
                log_x=log_spacing,
                log_y=False,
            )
            write_plot(svg, doc)
            info(f"Plot written to {svg}")
