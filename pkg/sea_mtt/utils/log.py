"""
Logging setup for the command-line front end.

Library modules only call ``logging.getLogger("sea-mtt.<area>")``; the
handler is installed once here.
"""

import logging

from rich.logging import RichHandler

from sea_mtt.utils.output import err_console

LOGGER_NAME = "sea-mtt"


def setup_logging(verbose: bool = False) -> logging.Logger:
    """Attach a Rich handler on stderr to the ``sea-mtt`` logger."""
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)

    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=err_console, show_path=False, rich_tracebacks=False)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
    return logger
