#!/usr/bin/env python3

# std
import itertools
import unittest

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.algebra.finite_field import (
    field_new,
    gf_mul,
    gf_trace,
    is_primitive,
    PRIMITIVE_POLYNOMIALS,
)
from kerdocklab.errors import UnsupportedParameterError


class TestGaloisField(MyTestCase):
    def test_table_moduli_primitive(self):
        for m, modulus in PRIMITIVE_POLYNOMIALS.items():
            with self.subTest(m=m):
                self.assertTrue(is_primitive(modulus))
                self.assertEqual(field_new(m).n, 2 ** m - 1)

    def test_moduli(self):
        self.assertEqual(field_new(3).modulus, 0b1011)
        self.assertEqual(field_new(4).modulus, 0b10011)
        self.assertEqual(field_new(5).modulus, 0b100101)

    def test_generator_order_m5(self):
        f = field_new(5)
        value = 1
        for k in range(1, 31):
            value = f.mul(value, f.generator)
            if k < 31:
                self.assertNotEqual(value, 1, msg="X^{} = 1".format(k))
        self.assertEqual(f.mul(value, f.generator), 1)

    def test_unsupported(self):
        for m in [1, 2, 11]:
            with self.subTest(m=m):
                with self.assertRaises(UnsupportedParameterError):
                    field_new(m)

    def test_mul_examples(self):
        f = field_new(3)
        self.assertEqual(gf_mul(2, 2, f), 4)
        self.assertEqual(gf_mul(4, 2, f), 3)
        for b in range(8):
            self.assertEqual(gf_mul(1, b, f), b)

    def test_group_order(self):
        for m in [3, 4, 5, 6]:
            f = field_new(m)
            for a in range(1, 2 ** m):
                self.assertEqual(f.power(a, f.n), 1)

    def test_ring_axioms_exhaustive(self):
        for m in [3, 4]:
            f = field_new(m)
            elements = range(2 ** m)
            for a, b, c in itertools.product(elements, repeat=3):
                self.assertEqual(
                    f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c)
                )
                self.assertEqual(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c))
            for a, b in itertools.product(elements, repeat=2):
                self.assertEqual(f.mul(a, b), f.mul(b, a))

    def test_associative_m5(self):
        f = field_new(5)
        for a, b, c in itertools.product(range(32), repeat=3):
            if f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c):
                self.fail("Not associative at {}".format((a, b, c)))

    def test_log_tables(self):
        f = field_new(6)
        for a in range(1, 64):
            self.assertEqual(int(f.exp[f.log[a]]), a)
            self.assertEqual(f.mul(a, f.inverse(a)), 1)

    def test_trace(self):
        f = field_new(5)
        self.assertEqual(gf_trace(0, f), 0)
        self.assertEqual(gf_trace(1, f), 1)
        self.assertEqual(sum(f.trace(a) for a in range(32)), 16)

    def test_trace_linear_and_frobenius_invariant(self):
        for m in [3, 4, 5]:
            f = field_new(m)
            for a, b in itertools.product(range(2 ** m), repeat=2):
                self.assertEqual(f.trace(a ^ b), f.trace(a) ^ f.trace(b))
            for a in range(2 ** m):
                self.assertEqual(f.trace(f.mul(a, a)), f.trace(a))

    def test_trace_balanced(self):
        for m in range(3, 11):
            f = field_new(m)
            with self.subTest(m=m):
                self.assertEqual(int(f.trace_table.sum()), 2 ** (m - 1))
                self.assertEqual(f.trace(1), m % 2)

    def test_minimal_polynomials(self):
        f = field_new(4)
        self.assertEqual(f.minimal_polynomial(1), 0b10011)
        self.assertEqual(f.minimal_polynomial(3), 0b11111)
        self.assertEqual(f.cyclotomic_coset(3), [3, 6, 12, 9])
        f5 = field_new(5)
        self.assertEqual(f5.minimal_polynomial(1), f5.modulus)
        self.assertEqual(len(f5.cyclotomic_coset(3)), 5)


if __name__ == "__main__":
    unittest.main()
