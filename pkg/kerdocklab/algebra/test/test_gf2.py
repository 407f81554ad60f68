#!/usr/bin/env python3

# std
import unittest

# 3rd party
import numpy as np

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.algebra.gf2 import (
    XorBasis,
    clmul,
    gf2_rank,
    poly_mod,
    rref,
    matrix_rank,
    bits_to_ints,
    ints_to_bits,
)


class TestPolynomials(MyTestCase):
    def test_clmul(self):
        # (X + 1)^2 = X^2 + 1
        self.assertEqual(clmul(0b11, 0b11), 0b101)
        self.assertEqual(clmul(0b1011, 1), 0b1011)
        self.assertEqual(clmul(0, 0b111), 0)

    def test_poly_mod(self):
        # X^3 = X + 1 mod X^3 + X + 1
        self.assertEqual(poly_mod(0b1000, 0b1011), 0b011)
        self.assertEqual(poly_mod(0b11, 0b1011), 0b11)


class TestXorBasis(MyTestCase):
    def test_rank(self):
        basis = XorBasis([0b011, 0b101, 0b110])
        self.assertEqual(basis.rank, 2)
        self.assertIn(0b110, basis)
        self.assertNotIn(0b001, basis)
        self.assertFalse(basis.add(0))
        self.assertTrue(basis.add(0b001))
        self.assertEqual(basis.rank, 3)

    def test_gf2_rank_stop(self):
        rows = [1 << i for i in range(10)]
        self.assertEqual(gf2_rank(rows), 10)
        self.assertEqual(gf2_rank(rows, stop_at=4), 4)


class TestRref(MyTestCase):
    def test_rref(self):
        m = np.array(
            [[1, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 1]], dtype=bool
        )
        reduced, pivots = rref(m)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(reduced.shape, (2, 4))
        self.assertEqual(matrix_rank(m), 2)
        self.assertEqual(
            sorted(bits_to_ints(reduced)),
            sorted([0b1101, 0b0110]),
        )

    def test_int_roundtrip(self):
        m = np.random.default_rng(3).integers(0, 2, size=(5, 9)).astype(bool)
        self.assertArrayEqual(ints_to_bits(bits_to_ints(m), 9), m)


if __name__ == "__main__":
    unittest.main()
