#!/usr/bin/env python3

# std
from abc import ABC, abstractmethod
import json
from pathlib import Path, PurePath
from typing import Union

# ours
from kerdocklab.util.log import get_logger
from kerdocklab.util.metadata import failsafe_serialize


class AbstractResult(ABC):
    """ The result object represents the outcome of running a
    :class:`~kerdocklab.worker.AbstractWorker`.

    .. note::

        Results are not meant to be initialized by the user. Rather they are
        returned by the ``run`` methods of the workers.
    """

    def __init__(self):
        self.log = get_logger(type(self).__name__)

    @abstractmethod
    def to_dict(self) -> dict:
        """ JSON-compatible representation. """
        pass

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault("indent", 2)
        kwargs.setdefault("sort_keys", True)
        return json.dumps(failsafe_serialize(self.to_dict()), **kwargs)

    def write(self, path: Union[str, PurePath]) -> None:
        """ Save JSON representation to file. """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n")
        self.log.info("Wrote {} to {}.".format(type(self).__name__, path))
