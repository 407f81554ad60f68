#!/usr/bin/env python3

""" Helpers for the command line interface. """

# std
from typing import Iterable
import pathlib

OVERWRITE_BEHAVIORS = ("overwrite", "raise")


def handle_overwrite(paths: Iterable[pathlib.Path], behavior: str, log) -> bool:
    """ Check whether output files may be written.

    Args:
        paths: Output paths
        behavior: ``"overwrite"`` replaces existing files, ``"raise"`` raises
            a ``FileExistsError`` if any of them exists
        log: logging.Logger instance

    Returns:
        True if an existing file will be overwritten, else False.
    """
    behavior = behavior.lower()
    if behavior not in OVERWRITE_BEHAVIORS:
        msg = "Unknown option '{}' for 'overwrite' argument.".format(behavior)
        log.critical(msg)
        raise ValueError(msg)
    existing = [str(p) for p in paths if p.exists()]
    if not existing:
        return False
    if behavior == "raise":
        msg = "Output file(s) {} already exist.".format(", ".join(existing))
        log.critical(msg)
        raise FileExistsError(msg)
    log.debug("Overwriting {}.".format(", ".join(existing)))
    return True
