#!/usr/bin/env python3

# std
import logging
import os
import unittest

# 3rd party
import numpy as np

# ours
from kerdocklab.util.log import set_global_log_level

ENV_VAR_TESTING_MODE = "KERDOCKLAB_TESTMODE"


def set_testing_mode(testing_mode: bool) -> None:
    """
    Set an environment variable signalling if we are in testing mode.

    Args:
        testing_mode (bool): True if we are in testing mode

    Returns:
        None
    """
    if testing_mode:
        os.environ[ENV_VAR_TESTING_MODE] = "true"
    else:
        os.environ[ENV_VAR_TESTING_MODE] = "false"


def is_testing_mode() -> bool:
    testing_mode = os.environ.get(ENV_VAR_TESTING_MODE, "false")
    if testing_mode == "true":
        return True
    elif testing_mode == "false":
        return False
    else:
        raise ValueError(
            "Environment variable {} set to invalid value {}.".format(
                ENV_VAR_TESTING_MODE, testing_mode
            )
        )


class MyTestCase(unittest.TestCase):
    """ Implements additional general testing methods. """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        set_testing_mode(True)
        set_global_log_level(logging.WARNING)

    def assertArrayEqual(self, a, b):
        """ Compares two integer/boolean arrays exactly. """
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape != b.shape or not np.array_equal(a, b):
            self.fail("Not the same: {} and {}.".format(a, b))

    def assertWeights(self, wd, expected):
        """ Compares a weight distribution with a ``{weight: count}`` dict. """
        self.assertEqual(dict(wd.items()), dict(expected))
