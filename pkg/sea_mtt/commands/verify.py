"""
Verification battery command.
"""

import click

from sea_mtt.commands.common import config_option, exit_on_error, load_config
from sea_mtt.constants import EXIT_VERIFY_FAILED
from sea_mtt.core.verify import CheckStatus, Verifier
from sea_mtt.exceptions import VerificationFailed
from sea_mtt.utils.output import Spinner, console, error, print_json, success


def _fmt(value) -> str:
    return "" if value is None else f"{value:.3g}"


@click.command(name="verify")
@config_option
@click.option("--json", "as_json", is_flag=True, help="Print a machine-readable report")
@click.pass_context
def verify_cmd(ctx, config_path, as_json):
    """Cross-check the MTT predictions against the time-domain simulator.

    Exits 0 when every check passes, 1 otherwise.

    Example: sea-mtt verify --config sea.json
    """
    with exit_on_error(ctx):
        cfg = load_config(config_path)
        verifier = Verifier(
            cfg.to_params(),
            cfg.to_controller(),
            grid=cfg.to_grid(),
            dt=cfg.sim.dt,
            derate_band=cfg.sim.derate_band,
        )
        with Spinner("Running verification battery...") as spinner:
            report = verifier.run_all(progress=lambda label: spinner.update(f"Checking: {label}"))

    if as_json:
        print_json(
            {
                "passed": report.passed,
                "checks": [
                    {
                        "name": c.name,
                        "status": c.status.value,
                        "residual": c.residual,
                        "tolerance": c.tolerance,
                        "message": c.message,
                    }
                    for c in report.checks
                ],
            }
        )
    else:
        console.print()
        for check in report.checks:
            mark = "[green]✓[/green]" if check.status is CheckStatus.PASSED else "[red]✗[/red]"
            detail = ""
            if check.residual is not None:
                detail = f" residual {_fmt(check.residual)} (tol {_fmt(check.tolerance)})"
            note = f" [dim]{check.message}[/dim]" if check.message else ""
            console.print(f"  {mark} {check.name}:{detail}{note}")
        console.print()

    try:
        report.raise_if_failed()
    except VerificationFailed as e:
        error(str(e))
        ctx.exit(EXIT_VERIFY_FAILED)
    success(f"All {len(report.checks)} checks passed")
