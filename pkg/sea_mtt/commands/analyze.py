"""
MTT curve command.
"""

from pathlib import Path

import click

from sea_mtt.commands.common import config_option, exit_on_error, load_config
from sea_mtt.core.model import plant_magnitude
from sea_mtt.core.mtt import mtt_curve
from sea_mtt.utils.csvio import CsvTable
from sea_mtt.utils.output import info, success, warning
from sea_mtt.utils.svg import Series, render_plot, write_plot


@click.command(name="analyze")
@config_option
@click.option("--out", "-o", type=click.Path(dir_okay=False, path_type=Path), help="CSV output file")
@click.option("--svg", type=click.Path(dir_okay=False, path_type=Path), help="SVG plot output file")
@click.option("--plant", is_flag=True, help="Add the open-loop transmissibility column")
@click.pass_context
def analyze_cmd(ctx, config_path, out, svg, plant):
    """Sample MTT_tau and MTT_V over the frequency grid.

    Example: sea-mtt analyze --config sea.json --out mtt.csv --svg mtt.svg
    """
    with exit_on_error(ctx):
        cfg = load_config(config_path)
        params = cfg.to_params()
        curve = mtt_curve(params, cfg.to_controller(), cfg.to_grid())

        header = ["omega_rad_s", "mtt_tau", "mtt_v", "limiting"]
        gains = None
        if plant:
            header.append("plant_gain")
            gains = plant_magnitude(params, curve.omega)

        table = CsvTable(header)
        for i, omega in enumerate(curve.omega):
            row = [omega, curve.mtt_tau[i], curve.mtt_v[i], curve.limiting[i]]
            if gains is not None:
                row.append(float(gains[i]))
            table.add_row(row)

        text = table.write(out)
        if out is None:
            click.echo(text, nl=False)
        else:
            success(f"Wrote {len(table.rows)} rows to {out}")

        if curve.skipped:
            warning(f"{len(curve.skipped)} grid point(s) skipped on transfer-function poles")

        if svg:
            series = [
                Series("MTT_tau", curve.omega, curve.mtt_tau, color="#c0392b"),
                Series("MTT_V", curve.omega, curve.mtt_v, color="#2c6fbb", dashed=True),
            ]
            if gains is not None:
                series.append(Series("|P|/N_m", curve.omega, list(gains), color="#7f8c8d"))
            doc = render_plot(
                series,
                title=f"MTT ({params.load_case.value} load, N_m = {params.n_m:g})",
                x_label="omega [rad/s]",
                y_label="magnitude",
                threshold=1.0,
            )
            write_plot(svg, doc)
            info(f"Plot written to {svg}")
