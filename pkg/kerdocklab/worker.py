#!/usr/bin/env python3

# std
from abc import ABC, abstractmethod
import time

# ours
from kerdocklab.util.log import get_logger
from kerdocklab.util.metadata import nested_dict, version_info


class AbstractWorker(ABC):
    """ The AbstractWorker class represents an abstract operation.

    It provides a number of ``set_*`` methods to allow for configuration.
    After configuration, :meth:`run` can be called.

    The underlying design patterns of this class are therefore the
    `template method pattern <https://en.wikipedia.org/wiki/Template_method_pattern>`_
    and the `command pattern <https://en.wikipedia.org/wiki/Command_pattern>`_.
    """

    def __init__(self):
        self.log = get_logger(type(self).__name__)
        #: Settings and provenance of this worker
        self.md = nested_dict()

    def _stamp(self) -> None:
        """ Add version and time information to the metadata. """
        self.md["git"] = version_info(self.log)
        self.md["time"] = time.strftime("%a %d %b %Y %H:%M", time.gmtime())

    @abstractmethod
    def run(self, *args, **kwargs):
        """ Run the operation. Must be implemented in subclass. """
        pass


class CodeWorker(AbstractWorker):
    """ A worker that analyzes a single :class:`~kerdocklab.codes.Code`. """

    @abstractmethod
    def run(self, code, *args, **kwargs):
        """ Analyze ``code``. Must be implemented in subclass. """
        pass
