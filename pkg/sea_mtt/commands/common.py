"""
Shared options and error handling for the CLI commands.
"""

from contextlib import contextmanager
from pathlib import Path
from typing import Optional

import click

from sea_mtt.config import SeaConfig
from sea_mtt.constants import EXIT_INPUT_ERROR, EXIT_NUMERICAL_ERROR
from sea_mtt.exceptions import (
    ConfigError,
    InsufficientDuration,
    InvalidParams,
    NumericalError,
)
from sea_mtt.utils.output import error

config_option = click.option(
    "--config",
    "-c",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Parameter file (JSON, or YAML by suffix). Defaults to the bundled parameters.",
)


def load_config(config_path: Optional[Path]) -> SeaConfig:
    return SeaConfig.load(config_path)


@contextmanager
def exit_on_error(ctx: click.Context):
    """Report domain errors and exit with the matching code."""
    try:
        yield
    except ConfigError as e:
        error(f"Configuration error: {e}")
        ctx.exit(EXIT_INPUT_ERROR)
    except (InvalidParams, InsufficientDuration) as e:
        error(f"Invalid input: {e}")
        ctx.exit(EXIT_INPUT_ERROR)
    except NumericalError as e:
        error(f"Numerical failure: {e}")
        ctx.exit(EXIT_NUMERICAL_ERROR)
