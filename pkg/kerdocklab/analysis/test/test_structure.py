#!/usr/bin/env python3

# std
import unittest

# 3rd party
import numpy as np

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.analysis.structure import (
    EXHAUSTIVE,
    SAMPLED,
    check_coset_distances,
    check_coset_union,
    check_half_distance_closure,
    check_rm_in_kernel,
    check_rm_weight_class,
    kerdock_self_check,
)
from kerdocklab.codes.families import build_kerdock, build_rm1
from kerdocklab.codes.operators import flip_bits
from kerdocklab.errors import ConstructionError


class TestKerdockStructure(MyTestCase):
    @classmethod
    def setUpClass(cls):
        cls.k = build_kerdock(4)
        cls.broken = flip_bits(cls.k, [5], [0])

    def test_coset_union(self):
        verdict = check_coset_union(self.k)
        self.assertTrue(verdict)
        self.assertEqual(verdict.details["cosets"], 8)
        self.assertEqual(verdict.details["coset_sizes"], [32])
        self.assertFalse(check_coset_union(self.broken))
        self.assertFalse(check_coset_union(build_rm1(4)))

    def test_rm_weight_class(self):
        self.assertTrue(check_rm_weight_class(self.k, 4))

    def test_coset_distances(self):
        verdict = check_coset_distances(self.k, 4)
        self.assertTrue(verdict)
        self.assertEqual(verdict.mode, EXHAUSTIVE)
        self.assertEqual(verdict.checked, 256 * 255)
        self.assertEqual(verdict.details["inter_coset"], [6, 10])
        self.assertEqual(verdict.details["intra_coset"], [8, 16])

    def test_coset_distances_sampled(self):
        verdict = check_coset_distances(self.k, 4, mode=SAMPLED, pairs=500, seed=3)
        self.assertTrue(verdict)
        self.assertEqual(verdict.checked, 500)
        self.assertEqual(verdict.details["seed"], 3)
        with self.assertRaises(ValueError):
            check_coset_distances(self.k, 4, mode="approximate")

    def test_rm_in_kernel(self):
        self.assertTrue(check_rm_in_kernel(self.k, 4))

    def test_half_distance_closure(self):
        verdict = check_half_distance_closure(self.k, 4)
        self.assertTrue(verdict)
        self.assertEqual(verdict.checked, 256 * 30)
        # 0 and x are at distance n/2, x + 0 = x is missing
        first = int(np.nonzero(self.k.weights() == 8)[0][0])
        missing = self.k.subset(np.arange(self.k.size) != first)
        self.assertFalse(check_half_distance_closure(missing, 4))

    def test_half_distance_closure_sampled(self):
        verdict = check_half_distance_closure(
            self.k, 4, mode=SAMPLED, pairs=300, seed=0
        )
        self.assertTrue(verdict)
        self.assertGreaterEqual(verdict.checked, 300)

    def test_self_check(self):
        kerdock_self_check(self.k, 4)
        with self.assertRaises(ConstructionError):
            kerdock_self_check(self.broken, 4)

    def test_to_dict(self):
        d = check_rm_in_kernel(self.k, 4).to_dict()
        self.assertEqual(d["name"], "rm-in-kernel")
        self.assertEqual(d["checked"], 32)
        self.assertEqual(d["failing"], 0)


if __name__ == "__main__":
    unittest.main()
