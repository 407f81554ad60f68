#!/usr/bin/env python3

# std
import collections
import itertools
import unittest

# 3rd party
import numpy as np

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.algebra.galois_ring import (
    hensel_lift,
    ring_new,
    ring_trace,
    gray_map,
    lee_weight,
)
from kerdocklab.errors import ConstructionError, UnsupportedParameterError


class TestHenselLift(MyTestCase):
    def test_degree_three(self):
        self.assertEqual(hensel_lift(0b1011), [3, 1, 2, 1])

    def test_reduces_to_f(self):
        for f in [0b1011, 0b100101, 0b10001001]:
            h = hensel_lift(f)
            with self.subTest(f=f):
                self.assertEqual(
                    sum((hk % 2) << k for k, hk in enumerate(h)), f
                )

    def test_not_primitive(self):
        # X^4 + X^3 + X^2 + X + 1 is irreducible, but X has order 5
        with self.assertRaises(ConstructionError):
            hensel_lift(0b11111)

    def test_xi_order_t5(self):
        r = ring_new(5)
        self.assertEqual(len(r.teichmueller), 32)
        value = r.one
        for j in range(1, 31):
            value = r.mul(value, r.xi)
            self.assertNotEqual(value, r.one)
        self.assertEqual(r.mul(value, r.xi), r.one)

    def test_even_degree_rejected(self):
        with self.assertRaises(UnsupportedParameterError):
            ring_new(4)


class TestGaloisRing(MyTestCase):
    def setUp(self):
        self.r = ring_new(3)
        self.elements = list(self.r.elements())

    def test_teichmueller_closed_under_squaring(self):
        for t in [3, 5]:
            r = ring_new(t)
            teich = set(r.teichmueller)
            for u in r.teichmueller:
                self.assertIn(r.mul(u, u), teich)

    def test_frobenius_automorphism(self):
        r = self.r
        for a, b in itertools.product(self.elements, repeat=2):
            self.assertEqual(
                r.frobenius(r.mul(a, b)),
                r.mul(r.frobenius(a), r.frobenius(b)),
            )
            self.assertEqual(
                r.frobenius(r.add(a, b)),
                r.add(r.frobenius(a), r.frobenius(b)),
            )

    def test_frobenius_order(self):
        r = self.r
        images = set()
        for a in self.elements:
            images.add(r.frobenius(a))
            self.assertEqual(
                r.frobenius(r.frobenius(r.frobenius(a))), a
            )
        self.assertEqual(len(images), 64)
        self.assertNotEqual(r.frobenius(r.xi), r.xi)

    def test_trace_balanced(self):
        counts = collections.Counter(ring_trace(a, self.r) for a in self.elements)
        self.assertEqual(counts, {0: 16, 1: 16, 2: 16, 3: 16})

    def test_trace_linear(self):
        r = self.r
        self.assertEqual(ring_trace(r.zero, r), 0)
        for a in self.elements:
            self.assertEqual(r.trace(r.scale(2, a)), (2 * r.trace(a)) % 4)
            self.assertEqual(r.trace(r.frobenius(a)), r.trace(a))
        for a, b in itertools.product(self.elements[::5], repeat=2):
            self.assertEqual(r.trace(r.add(a, b)), (r.trace(a) + r.trace(b)) % 4)

    def test_trace_equals_matrix_trace(self):
        # trace of the multiplication map in the basis 1, xi, xi^2
        r = self.r
        basis = r.xi_powers()
        for a in self.elements:
            diag = sum(r.mul(a, b)[k] for k, b in enumerate(basis))
            self.assertEqual(r.trace(a), diag % 4)

    def test_trace_matrix(self):
        r = self.r
        mat = r.trace_matrix()
        self.assertEqual(mat.shape, (3, 8))
        for lam in self.elements[::7]:
            for res in range(8):
                u = r.teichmueller_of(res)
                self.assertEqual(
                    r.trace(r.mul(lam, u)),
                    int(np.dot(lam, mat[:, res]) % 4),
                )


class TestGrayMap(MyTestCase):
    def test_examples(self):
        self.assertArrayEqual(gray_map([0, 0, 0]), np.zeros(6, dtype=bool))
        self.assertArrayEqual(gray_map([2, 2, 2]), np.ones(6, dtype=bool))
        self.assertArrayEqual(
            gray_map([1, 3, 0, 2]).astype(int), [0, 1, 1, 0, 0, 0, 1, 1]
        )
        self.assertEqual(int(lee_weight([1, 3, 0, 2])), 4)

    def test_distance_preserving(self):
        words = np.array(list(itertools.product(range(4), repeat=4)))
        bits = gray_map(words)
        hamming = (bits[:, None, :] != bits[None, :, :]).sum(axis=-1)
        lee = lee_weight(words[:, None, :] - words[None, :, :])
        self.assertArrayEqual(hamming, lee)


if __name__ == "__main__":
    unittest.main()
