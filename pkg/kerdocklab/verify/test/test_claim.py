#!/usr/bin/env python3

# std
import unittest

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.verify.claim import FAIL, FULL, PASS, SKIPPED, Claim
from kerdocklab.verify.factory import CodeFactory

SOURCE = "a source"
QUOTE = "a statement"


def _constant(factory, value):
    return {"value": value, "other": 1}, "exhaustive"


def _raising(factory):
    raise ZeroDivisionError("boom")


class TestClaim(MyTestCase):
    def test_pass(self):
        claim = Claim(
            "c", SOURCE, QUOTE, {"value": 3}, _constant, {"value": 3, "other": 1}
        )
        result = claim.evaluate(CodeFactory())
        self.assertEqual(result.status, PASS)
        self.assertEqual(result.mode, "exhaustive")
        self.assertEqual(result.diff(), {})
        self.assertNotIn("diff", result.to_dict())

    def test_fail(self):
        claim = Claim(
            "c", SOURCE, QUOTE, {"value": 4}, _constant, {"value": 3, "other": 1}
        )
        result = claim.evaluate(CodeFactory())
        self.assertTrue(result.failed)
        self.assertEqual(result.diff(), {"value": {"computed": 4, "expected": 3}})
        self.assertEqual(result.to_dict()["diff"], result.diff())

    def test_exception(self):
        claim = Claim("c", SOURCE, QUOTE, {}, _raising, True)
        result = claim.evaluate(CodeFactory())
        self.assertEqual(result.status, FAIL)
        self.assertEqual(result.computed, "ZeroDivisionError: boom")

    def test_skip(self):
        claim = Claim("c", SOURCE, QUOTE, {}, _raising, True, FULL, skip_reason="later")
        result = claim.evaluate(CodeFactory())
        self.assertEqual(result.status, SKIPPED)
        self.assertEqual(result.to_dict()["reason"], "later")

    def test_timing(self):
        claim = Claim(
            "c", SOURCE, QUOTE, {"value": 3}, _constant, {"value": 3, "other": 1}
        )
        d = claim.evaluate(CodeFactory()).to_dict(include_timing=False)
        self.assertNotIn("runtime_ms", d)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            Claim("c", SOURCE, QUOTE, {}, _constant, 1, effort="medium")
        with self.assertRaises(ValueError):
            Claim("c", "a source", "", {}, _constant, 1)

    def test_properties(self):
        claim = Claim("c", "a", "b", {"family": "kerdock", "m": 4}, _constant, 1)
        self.assertEqual(claim.family, "kerdock")
        self.assertEqual(claim.m, 4)

    def test_anchor(self):
        claim = Claim("c", "Conclusion", "two words", {}, _constant, 1)
        self.assertEqual(claim.anchor, 'Conclusion: "two words"')
        self.assertEqual(
            claim.evaluate(CodeFactory()).to_dict()["anchor"], claim.anchor
        )


if __name__ == "__main__":
    unittest.main()
