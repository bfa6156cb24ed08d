"""
File: logging_config.py
Description: Logging configuration for walks, sweeps and Monte Carlo runs.
"""

import logging
import os
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]  # goes up from utils/ to src/
LOGS_DIR = PROJECT_ROOT / "logs"
LOGS_DIR.mkdir(exist_ok=True)  # ensure logs/ exists
LOG_FILE = LOGS_DIR / "saqwalk.log"

_LEVEL = getattr(
    logging, os.environ.get("SAQW_LOG_LEVEL", "INFO").upper(), logging.INFO
)
_handlers: list[logging.Handler] = []
_loggers: list[logging.Logger] = []


def _shared_handlers() -> list[logging.Handler]:
    # one file handle shared by every module
    if not _handlers:
        formatter = logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")

        # Use mode="w" to overwrite the log file each run
        file_handler = logging.FileHandler(LOG_FILE, mode="w")
        file_handler.setFormatter(formatter)

        # stdout is reserved for JSON fit summaries
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)

        _handlers.extend([file_handler, console_handler])
    return _handlers


def setup_logger(name=__name__):
    logger = logging.getLogger(name)
    logger.setLevel(_LEVEL)

    # Prevent adding handlers multiple times
    if not logger.handlers:
        for handler in _shared_handlers():
            logger.addHandler(handler)
        _loggers.append(logger)

    return logger


def set_log_level(level: int) -> None:
    """Change the level of every logger created through setup_logger."""
    global _LEVEL
    _LEVEL = level
    for logger in _loggers:
        logger.setLevel(level)


def progress_enabled() -> bool:
    """tqdm bars only show when INFO messages would."""
    return _LEVEL <= logging.INFO
