#!/usr/bin/env python3

"""Logger setup shared by all kerdocklab modules. """

import logging
import os

try:
    import colorlog
except ImportError:
    colorlog = None

KERDOCKLAB_LOGLEVEL_ENV = "KERDOCKLAB_LOG_LEVEL"

_LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "red",
}


def get_logger(name="kerdocklab", level=logging.WARNING, sh_level=None):
    """Sets up a logging.Logger.

    Colored output is used if the colorlog module is available, otherwise
    the handler falls back to the plain logging formatter.

    Args:
        name: name of the logger
        level: General logging level. Overridden by the environment variable
            ``KERDOCKLAB_LOG_LEVEL`` if it is set.
        sh_level: Logging level of the stream handler. Defaults to
            ``logging.DEBUG``, so that the logger level alone decides.

    Returns:
        Logger
    """
    if colorlog:
        _logger = colorlog.getLogger(name)
    else:
        _logger = logging.getLogger(name)

    if _logger.handlers:
        # existing logger, already configured
        return _logger

    _logger.setLevel(level)
    if os.environ.get(KERDOCKLAB_LOGLEVEL_ENV, False):
        _logger.setLevel(int(os.environ.get(KERDOCKLAB_LOGLEVEL_ENV)))

    if sh_level is None:
        sh_level = logging.DEBUG

    if colorlog is not None:
        sh = colorlog.StreamHandler()
        formatter = colorlog.ColoredFormatter(
            "%(log_color)s%(name)s:%(levelname)s:%(message)s",
            log_colors=_LOG_COLORS,
        )
    else:
        sh = logging.StreamHandler()
        formatter = logging.Formatter("%(name)s:%(levelname)s:%(message)s")
    sh.setFormatter(formatter)
    sh.setLevel(sh_level)
    _logger.addHandler(sh)
    # handlers are attached per logger, don't print twice via root
    _logger.propagate = False

    if colorlog is None:
        _logger.debug("Module colorlog not available. Log will be b/w.")

    return _logger


def set_global_log_level(level=logging.INFO) -> None:
    """ Set the level of all loggers created so far and of all loggers
    that will be created by :func:`get_logger` afterwards. """
    names = list(logging.root.manager.loggerDict.keys())
    loggers = [logging.getLogger(name) for name in names]
    for logger in loggers:
        logger.setLevel(level)
    os.environ[KERDOCKLAB_LOGLEVEL_ENV] = str(level)
