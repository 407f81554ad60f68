#!/usr/bin/env python3

# std
import unittest

# 3rd party
import numpy as np

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.codes import bitops
from kerdocklab.codes.code import Code, WeightDistribution
from kerdocklab.errors import LengthMismatchError


class TestBitops(MyTestCase):
    def test_popcount(self):
        words = bitops.from_ints([0, 1, 2 ** 64 - 1, 2 ** 70], 71)
        self.assertEqual(words.shape, (4, 2))
        self.assertArrayEqual(bitops.popcount(words), [0, 1, 64, 1])

    def test_pack_unpack(self):
        rng = np.random.default_rng(1)
        bits = rng.integers(0, 2, size=(20, 130)).astype(bool)
        self.assertArrayEqual(
            bitops.unpack_bits(bitops.pack_bits(bits), 130), bits
        )

    def test_ints(self):
        values = [0, 5, 2 ** 65 + 3]
        self.assertEqual(bitops.to_ints(bitops.from_ints(values, 66)), values)

    def test_bit(self):
        words = bitops.from_ints([0b0101, 0b0010], 4)
        self.assertArrayEqual(bitops.bit(words, 0), [True, False])
        self.assertArrayEqual(bitops.bit(words, 1), [False, True])

    def test_canonicalize(self):
        words = bitops.from_ints([7, 2 ** 64, 3, 7], 65)
        self.assertEqual(
            bitops.to_ints(bitops.canonicalize(words)), [3, 7, 2 ** 64]
        )

    def test_distances(self):
        a = bitops.from_ints([0, 0b1111], 4)
        b = bitops.from_ints([0b0011, 0b1000], 4)
        self.assertArrayEqual(bitops.distances(a, b), [[2, 1], [2, 3]])


class TestCode(MyTestCase):
    def setUp(self):
        self.code = Code.from_strings(["0111", "0000", "1010", "1100"])

    def test_canonical_order(self):
        self.assertEqual(self.code.ints(), [0, 3, 5, 14])
        self.assertArrayEqual(
            self.code.bits()[1], np.array([1, 1, 0, 0], dtype=bool)
        )

    def test_duplicates(self):
        code = Code.from_ints([3, 3, 1], n=4)
        self.assertEqual(code.size, 2)

    def test_membership(self):
        self.assertIn(3, self.code)
        self.assertNotIn(6, self.code)
        self.assertIn(np.array([1, 0, 1, 0], dtype=bool), self.code)
        self.assertArrayEqual(
            self.code.contains_words(bitops.from_ints([14, 15], 4)),
            [True, False],
        )

    def test_weights(self):
        self.assertArrayEqual(self.code.weights(), [0, 2, 2, 3])
        self.assertWeights(
            self.code.weight_distribution(), {0: 1, 2: 2, 3: 1}
        )
        self.assertEqual(self.code.with_weight(2).ints(), [3, 5])

    def test_min_distance(self):
        self.assertEqual(self.code.min_distance, 2)
        self.assertIsNone(Code.from_ints([1], n=3).min_distance)

    def test_equality(self):
        self.assertEqual(self.code, Code.from_ints([14, 5, 3, 0], n=4))
        self.assertNotEqual(self.code, Code.from_ints([0, 3, 5], n=4))

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatchError):
            Code(np.zeros((2, 2), dtype=np.uint64), n=10)
        with self.assertRaises(ValueError):
            Code(np.zeros((2, 1), dtype=np.uint64), n=0)


class TestWeightDistribution(MyTestCase):
    def test_basics(self):
        wd = WeightDistribution({0: 1, 3: 4, 2: 0}, n=4)
        self.assertEqual(list(wd), [0, 3])
        self.assertEqual(wd.total, 5)
        self.assertEqual(wd.nontrivial_weights(), [3])
        self.assertEqual(wd.to_dict(), {"0": 1, "3": 4})
        self.assertTrue(wd.is_integral)

    def test_bad_weight(self):
        with self.assertRaises(ValueError):
            WeightDistribution({5: 1}, n=4)

    def test_enumerator(self):
        wd = WeightDistribution({0: 1, 2: 1}, n=2)
        poly = wd.enumerator()
        x, y = poly.gens
        self.assertEqual(poly.as_expr(), x ** 2 + y ** 2)


if __name__ == "__main__":
    unittest.main()
