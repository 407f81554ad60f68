#!/usr/bin/env python3

# std
from typing import Dict, Optional, Tuple

# ours
from kerdocklab.codes.families import cached_family

Key = Tuple[str, int, int]


class CodeFactory(object):
    """ Source of the codes the claims are checked on.

    Codes come from :func:`~kerdocklab.codes.families.cached_family` unless
    an override was registered, which allows checking the claims against
    modified (e.g. corrupted) codes.
    """

    def __init__(self, overrides: Optional[Dict[Key, object]] = None):
        self._overrides = dict(overrides or {})

    def override(self, family: str, m: int, code, e: int = 3) -> None:
        self._overrides[(family, m, e)] = code

    @property
    def overridden(self) -> bool:
        return bool(self._overrides)

    def get(self, family: str, m: int, e: int = 3):
        key = (family, m, e)
        if key in self._overrides:
            return self._overrides[key]
        return cached_family(family, m, e)
