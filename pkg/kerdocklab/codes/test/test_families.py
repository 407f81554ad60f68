#!/usr/bin/env python3

# std
import unittest

# 3rd party
import numpy as np

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.codes.families import (
    ParityCheckCode,
    build_bch_c13,
    build_kerdock,
    build_rm1,
    build_trace_dual,
    cached_family,
    coset_keys,
    gold_exponent,
    kerdock_parameters,
    validate_exponent,
)
from kerdocklab.errors import UnsupportedParameterError

BCH_DUAL_M5 = {0: 1, 12: 310, 16: 527, 20: 186}


class TestReedMuller(MyTestCase):
    def test_rm1(self):
        rm = build_rm1(4)
        self.assertEqual(rm.n, 16)
        self.assertEqual(rm.size, 32)
        self.assertTrue(rm.linear)
        self.assertWeights(rm.weight_distribution(), {0: 1, 8: 30, 16: 1})

    def test_range(self):
        with self.assertRaises(UnsupportedParameterError):
            build_rm1(2)
        with self.assertRaises(UnsupportedParameterError):
            build_rm1(11)


class TestKerdock(MyTestCase):
    def test_parameters(self):
        self.assertEqual(kerdock_parameters(4), (16, 6))
        self.assertEqual(kerdock_parameters(6), (64, 28))
        self.assertEqual(kerdock_parameters(8), (256, 120))

    def test_m4(self):
        k = build_kerdock(4)
        self.assertEqual(k.size, 256)
        self.assertTrue(k.distance_invariant)
        self.assertFalse(k.linear)
        self.assertEqual(k.min_distance, 6)
        self.assertWeights(
            k.weight_distribution(), {0: 1, 6: 112, 8: 30, 10: 112, 16: 1}
        )

    def test_m6(self):
        k = build_kerdock(6)
        self.assertEqual(k.size, 4096)
        self.assertWeights(
            k.weight_distribution(),
            {0: 1, 28: 1984, 32: 126, 36: 1984, 64: 1},
        )

    def test_contains_rm1(self):
        k = build_kerdock(4, self_check=False)
        self.assertTrue(k.contains_words(build_rm1(4).words).all())

    def test_cosets(self):
        k = build_kerdock(4, self_check=False)
        keys = coset_keys(k.words, 4)
        self.assertEqual(len(np.unique(keys, axis=0)), 8)

    def test_unsupported(self):
        for m in (3, 5, 10):
            with self.subTest(m=m):
                with self.assertRaises(UnsupportedParameterError):
                    build_kerdock(m)


class TestBCH(MyTestCase):
    def test_trace_dual(self):
        code = build_trace_dual(5)
        self.assertEqual(code.n, 31)
        self.assertEqual(code.size, 2 ** 10)
        self.assertWeights(code.weight_distribution(), BCH_DUAL_M5)

    def test_gold_dual(self):
        code = build_trace_dual(5, 5)
        self.assertWeights(code.weight_distribution(), BCH_DUAL_M5)

    def test_exponent(self):
        validate_exponent(5, 5)
        with self.assertRaises(UnsupportedParameterError):
            validate_exponent(6, 5)
        with self.assertRaises(UnsupportedParameterError):
            build_trace_dual(6, 5)

    def test_gold_exponent(self):
        self.assertEqual(gold_exponent(2), 5)
        validate_exponent(7, gold_exponent(3))
        with self.assertRaises(UnsupportedParameterError):
            validate_exponent(9, gold_exponent(3))

    def test_bch_enumerated(self):
        code = build_bch_c13(5)
        self.assertEqual(code.n, 31)
        self.assertEqual(code.size, 2 ** 21)
        self.assertEqual(code.min_distance, 5)

    def test_bch_m3(self):
        code = build_bch_c13(3)
        self.assertEqual(code.n, 7)
        self.assertWeights(code.weight_distribution(), {0: 1, 7: 1})

    def test_bch_parity_checks(self):
        code = build_bch_c13(6)
        self.assertIsInstance(code, ParityCheckCode)
        self.assertEqual(code.dimension, 51)
        self.assertEqual(code.redundancy, 12)
        self.assertEqual(code.designed_distance, 5)
        self.assertIn(0, code)
        self.assertNotIn(1, code)

    def test_bch_parity_check_matrix(self):
        self.assertEqual(build_bch_c13(6).parity_check_matrix().shape, (12, 63))

    def test_cached_family(self):
        self.assertIs(cached_family("kerdock", 4), cached_family("kerdock", 4))
        with self.assertRaises(UnsupportedParameterError):
            cached_family("hamming", 4)


if __name__ == "__main__":
    unittest.main()
