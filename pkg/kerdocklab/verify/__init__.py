#!/usr/bin/env python3

""" Executable claims about Kerdock and BCH codes and the harness that
checks them. """

from kerdocklab.verify.claim import (
    Claim,
    ClaimResult,
    PASS,
    FAIL,
    SKIPPED,
    QUICK,
    FULL,
)
from kerdocklab.verify.factory import CodeFactory
from kerdocklab.verify.registry import (
    default_claims,
    kerdock_weight_formula,
    bch_dual_weight_formula,
)
from kerdocklab.verify.harness import VerificationHarness, VerificationReport
