"""
Logging for rotcocycle.

All module loggers are children of the ``rotcocycle`` package logger, which owns
the only handler. The handler writes to stderr so that reports on stdout stay
byte-stable. ``ROTCOCYCLE_DEBUG`` switches the package to DEBUG; the CLI's
``-v``/``-vv`` flags go through :func:`verbosity_level`.

Levels in use:
    INFO: precision escalations, report paths, suite summaries.
    DEBUG: per-word reductions, wrap-boundary section values, sampling fan-out.
"""

import logging
import os
import sys
from functools import lru_cache


ROTCOCYCLE_DEBUG_ENV_VAR = "ROTCOCYCLE_DEBUG"
PACKAGE_LOGGER = "rotcocycle"
DEFAULT_LOG_LEVEL = logging.WARNING
DEBUG_LOG_LEVEL = logging.DEBUG
LOG_FORMAT = "[%(name)s] %(levelname)s: %(message)s"

_TRUTHY = ("1", "true", "yes")


@lru_cache(maxsize=1)
def is_debug_enabled() -> bool:
    """True if ROTCOCYCLE_DEBUG is ``1``, ``true`` or ``yes`` (any case).

    Cached; call ``is_debug_enabled.cache_clear()`` after changing the variable.
    """
    return os.environ.get(ROTCOCYCLE_DEBUG_ENV_VAR, "").strip().lower() in _TRUTHY


def environment_level() -> int:
    return DEBUG_LOG_LEVEL if is_debug_enabled() else DEFAULT_LOG_LEVEL


def verbosity_level(count: int) -> int:
    """Map a ``-v`` count to a level; the environment switch wins when it is lower."""
    requested = {0: DEFAULT_LOG_LEVEL, 1: logging.INFO}.get(count, logging.DEBUG)
    return min(requested, environment_level())


def _package_logger() -> logging.Logger:
    root = logging.getLogger(PACKAGE_LOGGER)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.setLevel(environment_level())
    return root


def get_logger(name: str) -> logging.Logger:
    """Return the logger for a rotcocycle module.

    Names outside the package are nested under it, so every logger shares the
    package handler and level.

    Examples:
        >>> logger = get_logger(__name__)
        >>> logger.debug("sigma=2 at wrap boundary")  # shown with ROTCOCYCLE_DEBUG=1
    """
    _package_logger()
    if name != PACKAGE_LOGGER and not name.startswith(PACKAGE_LOGGER + "."):
        name = f"{PACKAGE_LOGGER}.{name}"
    return logging.getLogger(name)


def configure_logging(level: int | None = None) -> None:
    """Set the package log level; ``None`` restores the environment default.

    Examples:
        >>> configure_logging(logging.INFO)  # show precision escalations
        >>> configure_logging()
    """
    _package_logger().setLevel(environment_level() if level is None else level)


__all__ = [
    "ROTCOCYCLE_DEBUG_ENV_VAR",
    "configure_logging",
    "environment_level",
    "get_logger",
    "is_debug_enabled",
    "verbosity_level",
]
