#!/usr/bin/env python3

""" Claims: statements bound to an executable check, and their outcomes. """

# std
from typing import Any, Callable, Dict, Optional

# ours
from kerdocklab.util.metadata import failsafe_serialize

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

QUICK = "quick"
FULL = "full"
EFFORTS = (QUICK, FULL)


class Claim(object):
    """ A checkable statement.

    Args:
        id: unique identifier, e.g. ``"kerdock-weights-m4"``
        citation: where the statement is made, e.g. ``"Kerdock designs"``
        quote: the statement's own words
        params: parameters (``family``, ``m``, ...) passed to the checker
        checker: function ``checker(factory, **params) -> (computed, mode)``
        expected: value ``computed`` has to equal
        effort: ``"quick"`` claims run always, ``"full"`` claims only with
            full effort
        skip_reason: if set, the claim is never run and reported as skipped
    """

    def __init__(
        self,
        id: str,
        citation: str,
        quote: str,
        params: Dict[str, Any],
        checker: Callable,
        expected: Any,
        effort: str = QUICK,
        skip_reason: Optional[str] = None,
    ):
        if effort not in EFFORTS:
            raise ValueError("Unknown effort {!r}.".format(effort))
        if not citation or not quote:
            raise ValueError("Claim {} needs a citation and a quote.".format(id))
        self.id = id
        self.citation = citation
        self.quote = quote
        self.params = dict(params)
        self.checker = checker
        self.expected = failsafe_serialize(expected)
        self.effort = effort
        self.skip_reason = skip_reason

    @property
    def anchor(self) -> str:
        return "{}: \"{}\"".format(self.citation, self.quote)

    @property
    def family(self) -> Optional[str]:
        return self.params.get("family")

    @property
    def m(self) -> Optional[int]:
        return self.params.get("m")

    def __repr__(self):
        return "Claim({!r}, effort={})".format(self.id, self.effort)

    def skipped(self, reason: str) -> "ClaimResult":
        return ClaimResult(self, SKIPPED, computed=None, reason=reason)

    def evaluate(self, factory) -> "ClaimResult":
        """ Run the checker. Exceptions are turned into failures. """
        if self.skip_reason:
            return self.skipped(self.skip_reason)
        try:
            computed, mode = self.checker(factory, **self.params)
        except Exception as e:
            return ClaimResult(
                self,
                FAIL,
                computed="{}: {}".format(type(e).__name__, e),
                mode=None,
            )
        computed = failsafe_serialize(computed)
        status = PASS if computed == self.expected else FAIL
        return ClaimResult(self, status, computed=computed, mode=mode)


class ClaimResult(object):
    """ Outcome of evaluating a :class:`Claim`. """

    def __init__(
        self,
        claim: Claim,
        status: str,
        computed: Any,
        mode: Optional[str] = None,
        reason: Optional[str] = None,
        runtime_ms: Optional[float] = None,
    ):
        self.id = claim.id
        self.anchor = claim.anchor
        self.params = failsafe_serialize(claim.params)
        self.expected = claim.expected
        self.status = status
        self.computed = computed
        self.mode = mode
        self.reason = reason
        self.runtime_ms = runtime_ms

    def __repr__(self):
        return "ClaimResult({!r}, {})".format(self.id, self.status)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def diff(self) -> Dict[str, Any]:
        """ Entries of ``computed`` and ``expected`` that differ (for
        dictionaries), else both values. """
        if isinstance(self.computed, dict) and isinstance(self.expected, dict):
            keys = sorted(set(self.computed) | set(self.expected))
            return {
                k: {"computed": self.computed.get(k), "expected": self.expected.get(k)}
                for k in keys
                if self.computed.get(k) != self.expected.get(k)
            }
        if self.computed == self.expected:
            return {}
        return {"computed": self.computed, "expected": self.expected}

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "params": self.params,
            "status": self.status,
            "computed": self.computed,
            "expected": self.expected,
            "mode": self.mode,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.status == FAIL:
            out["diff"] = self.diff()
        if include_timing:
            out["runtime_ms"] = self.runtime_ms
        return out
