"""Logging setup. Logs go to stderr so report payloads on stdout stay clean."""

import sys
from typing import TextIO

from loguru import logger

LOG_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan> - <level>{message}</level>"
)


def verbosity_level(verbose: bool = False, quiet: bool = False) -> str:
    if verbose:
        return "DEBUG"
    if quiet:
        return "WARNING"
    return "INFO"


def setup_logging(level: str = "INFO", sink: TextIO | None = None) -> None:
    logger.remove()
    logger.add(sink if sink is not None else sys.stderr, level=level, format=LOG_FORMAT)
