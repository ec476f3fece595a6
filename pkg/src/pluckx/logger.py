from __future__ import annotations

import logging
import os

from rich.console import Console
from rich.logging import RichHandler

__all__ = ["logger", "setup_logger"]


def setup_logger() -> None:
    # stdout carries the JSON reports, so log records go to stderr
    logging.basicConfig(
        level=os.getenv("PLUCKX_LOG_LEVEL", logging.WARNING),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True)],
    )


logger = logging.getLogger("rich")
