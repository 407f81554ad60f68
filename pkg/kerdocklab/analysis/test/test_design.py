#!/usr/bin/env python3

# std
import unittest

# 3rd party
import sympy

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.analysis.design import (
    binom,
    design_strength,
    krawtchouk,
    macwilliams_polynomial,
    macwilliams_transform,
    magic_identity,
    one_design_index,
    subset_counts,
    assmus_mattson_strength,
)
from kerdocklab.codes.code import Code, WeightDistribution
from kerdocklab.codes.families import build_kerdock, build_rm1, build_trace_dual
from kerdocklab.errors import (
    InconsistentSizeError,
    MixedWeightError,
    NotADesignError,
)

NR = {0: 1, 6: 112, 8: 30, 10: 112, 16: 1}


class TestDesignStrength(MyTestCase):
    @classmethod
    def setUpClass(cls):
        cls.k = build_kerdock(4)
        cls.dual = build_trace_dual(5)

    def test_kerdock_classes(self):
        for weight, lambdas in (
            (6, [42, 14, 4]),
            (8, [15, 7, 3]),
            (10, [70, 42, 24]),
        ):
            with self.subTest(weight=weight):
                report = design_strength(self.k.with_weight(weight), max_t=3)
                self.assertEqual(report.strength, 3)
                self.assertEqual(report.lambdas, lambdas)
                self.assertEqual(report.lambda_(3), lambdas[2])
                self.assertFalse(report.sampled)

    def test_bch_dual_classes(self):
        for weight, lambda2 in ((12, 44), (16, 136), (20, 76)):
            with self.subTest(weight=weight):
                report = design_strength(self.dual.with_weight(weight), max_t=2)
                self.assertEqual(report.strength, 2)
                self.assertEqual(report.lambda_(2), lambda2)

    def test_not_a_design(self):
        blocks = Code.from_strings(["1100", "1010"])
        self.assertEqual(design_strength(blocks, max_t=2).strength, 0)
        with self.assertRaises(NotADesignError):
            one_design_index(blocks)

    def test_subset_counts(self):
        blocks = Code.from_strings(["1100", "1010"])
        self.assertArrayEqual(subset_counts(blocks, 1), [2, 1, 1, 0])
        self.assertEqual(len(subset_counts(blocks, 2)), binom(4, 2))

    def test_invalid(self):
        with self.assertRaises(MixedWeightError):
            design_strength(self.k, max_t=1)
        with self.assertRaises(ValueError):
            design_strength(self.k.with_weight(6), max_t=0)
        with self.assertRaises(ValueError):
            design_strength(self.k.with_weight(6), max_t=7)

    def test_nontrivial_weight_count(self):
        s_bar = len(self.k.weight_distribution().nontrivial_weights())
        self.assertEqual(s_bar, 3)
        report = design_strength(
            self.k.with_weight(8), max_t=3, nontrivial_weight_count=s_bar
        )
        self.assertEqual(report.to_dict()["nontrivial_weight_count"], 3)
        self.assertIsNone(
            design_strength(self.k.with_weight(8), max_t=1).nontrivial_weight_count
        )

    def test_prediction(self):
        self.assertEqual(
            assmus_mattson_strength(self.k.weight_distribution(), 6), 3
        )
        self.assertEqual(
            assmus_mattson_strength(self.dual.weight_distribution(), 5), 2
        )


class TestMagicIdentity(MyTestCase):
    def test_identity(self):
        blocks = build_kerdock(4).with_weight(6)
        result = magic_identity(0b1011, blocks)
        self.assertTrue(result)
        self.assertEqual(result.residual, 0)
        self.assertEqual(result.weight, 3)
        self.assertEqual(result.lambda1, 42)
        self.assertEqual(sum(result.distance_counts.values()), 112)

    def test_bool_vector(self):
        blocks = build_rm1(4).with_weight(8)
        x = [True] * 5 + [False] * 11
        self.assertTrue(magic_identity(x, blocks))

    def test_needs_design(self):
        with self.assertRaises(NotADesignError):
            magic_identity(1, Code.from_strings(["1100", "1010"]))


class TestMacWilliams(MyTestCase):
    def test_krawtchouk(self):
        self.assertEqual(krawtchouk(0, 3, 10), 1)
        self.assertEqual(krawtchouk(1, 3, 10), 4)
        self.assertEqual(krawtchouk(2, 1, 4), 0)

    def test_nordstrom_robinson(self):
        wd = build_kerdock(4).weight_distribution()
        self.assertEqual(macwilliams_transform(wd), wd)
        self.assertEqual(macwilliams_polynomial(wd), wd)
        self.assertWeights(macwilliams_transform(wd, size=256), NR)

    def test_rm1(self):
        wd = build_rm1(4).weight_distribution()
        self.assertWeights(
            macwilliams_transform(wd),
            {0: 1, 4: 140, 6: 448, 8: 870, 10: 448, 12: 140, 16: 1},
        )

    def test_involution(self):
        wd = build_trace_dual(5).weight_distribution()
        dual = macwilliams_transform(wd)
        self.assertEqual(dual.total, 2 ** 21)
        self.assertEqual(min(w for w in dual if w > 0), 5)
        self.assertEqual(macwilliams_transform(dual), wd)

    def test_rational(self):
        wd = WeightDistribution({0: 1, 1: 1}, n=2)
        dual = macwilliams_transform(wd)
        self.assertEqual(dual[0], 1)
        self.assertEqual(dual[1], 1)
        wd = WeightDistribution({0: 1, 1: 2}, n=2)
        self.assertEqual(macwilliams_transform(wd)[2], sympy.Rational(-1, 3))

    def test_size(self):
        wd = build_rm1(4).weight_distribution()
        with self.assertRaises(InconsistentSizeError):
            macwilliams_transform(wd, size=100)


if __name__ == "__main__":
    unittest.main()
