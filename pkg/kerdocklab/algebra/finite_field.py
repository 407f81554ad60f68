#!/usr/bin/env python3

""" Arithmetic in GF(2^m), 3 <= m <= 10.

Elements are integers in ``[0, 2^m)``; bit ``k`` is the coefficient of
``X^k`` in the polynomial basis. The primitive element is the class of ``X``
(the integer 2).
"""

# std
import functools
from typing import List

# 3rd party
import numpy as np

# ours
from kerdocklab.algebra.gf2 import clmul, poly_mod, poly_degree
from kerdocklab.errors import ConstructionError, UnsupportedParameterError

#: Fixed primitive polynomial per extension degree, as bitmask.
PRIMITIVE_POLYNOMIALS = {
    3: 0b1011,  # X^3 + X + 1
    4: 0b10011,  # X^4 + X + 1
    5: 0b100101,  # X^5 + X^2 + 1
    6: 0b1000011,  # X^6 + X + 1
    7: 0b10001001,  # X^7 + X^3 + 1
    8: 0b100011101,  # X^8 + X^4 + X^3 + X^2 + 1
    9: 0b1000010001,  # X^9 + X^4 + 1
    10: 0b10000001001,  # X^10 + X^3 + 1
}


def multiplicative_order_of_x(modulus: int) -> int:
    """ Order of ``X`` in GF(2)[X]/(modulus), 0 if ``X`` is not invertible
    or the order exceeds ``2^deg - 1``. """
    deg = poly_degree(modulus)
    if deg < 1 or not modulus & 1:
        return 0
    x = poly_mod(2, modulus)
    value = x
    for k in range(1, 2 ** deg):
        if value == 1:
            return k
        value = poly_mod(value << 1, modulus)
    return 0


def is_primitive(modulus: int) -> bool:
    """ Exhaustive primitivity test (fine for degrees up to ~20). """
    deg = poly_degree(modulus)
    return multiplicative_order_of_x(modulus) == 2 ** deg - 1


class GaloisField(object):
    """ The field GF(2^m) with modulus taken from
    :data:`PRIMITIVE_POLYNOMIALS`.

    Use :func:`field_new` to obtain (cached) instances.
    """

    def __init__(self, m: int):
        if m not in PRIMITIVE_POLYNOMIALS:
            raise UnsupportedParameterError(
                "GF(2^m) is only supported for 3 <= m <= 10, got m={}.".format(
                    m
                )
            )
        self.m = m
        self.modulus = PRIMITIVE_POLYNOMIALS[m]
        self.order = 2 ** m
        #: Order of the multiplicative group
        self.n = 2 ** m - 1
        #: Primitive element (class of X)
        self.generator = 2

        exp = np.zeros(2 * self.n, dtype=np.int64)
        value = 1
        for k in range(self.n):
            exp[k] = value
            value = poly_mod(value << 1, self.modulus)
            if value == 1 and k + 1 < self.n:
                raise ConstructionError(
                    "Modulus {:#b} is not primitive: X has order {}.".format(
                        self.modulus, k + 1
                    )
                )
        if value != 1:
            raise ConstructionError(
                "Modulus {:#b} is not primitive.".format(self.modulus)
            )
        exp[self.n :] = exp[: self.n]
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp[: self.n]] = np.arange(self.n)
        #: ``exp[k] = alpha^k`` for ``0 <= k < 2n`` (doubled for convenience)
        self.exp = exp
        #: discrete logarithm, ``log[0] = -1``
        self.log = log
        for arr in (self.exp, self.log):
            arr.setflags(write=False)

        # Tr(a) is GF(2)-linear, so it is the parity of a & mask where bit k
        # of the mask is Tr(X^k).
        self.trace_mask = 0
        for k in range(m):
            if self._trace_by_definition(1 << k):
                self.trace_mask |= 1 << k
        self.trace_table = np.array(
            [bin(a & self.trace_mask).count("1") & 1 for a in range(self.order)],
            dtype=np.uint8,
        )
        self.trace_table.setflags(write=False)

    def __repr__(self):
        return "GaloisField(m={}, modulus={:#b})".format(self.m, self.modulus)

    # **************************************************************************
    # Arithmetic
    # **************************************************************************

    def mul(self, a: int, b: int) -> int:
        """ Carry-less product reduced modulo the field polynomial. """
        return poly_mod(clmul(a, b), self.modulus)

    def power(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k > 0 else 1
        return int(self.exp[(int(self.log[a]) * k) % self.n])

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^m).")
        return int(self.exp[(self.n - int(self.log[a])) % self.n])

    def alpha_powers(self, e: int = 1) -> np.ndarray:
        """ ``(alpha^(e*j))_{j=0..n-1}`` as integer array. """
        return self.exp[(np.arange(self.n) * e) % self.n]

    def _trace_by_definition(self, a: int) -> int:
        acc = 0
        value = a
        for _ in range(self.m):
            acc ^= value
            value = self.mul(value, value)
        if acc not in (0, 1):
            raise ConstructionError("Trace of {} is not in GF(2).".format(a))
        return acc

    def trace(self, a: int) -> int:
        return int(self.trace_table[a])

    def trace_array(self, a: np.ndarray) -> np.ndarray:
        return self.trace_table[a]

    # **************************************************************************
    # Cyclotomic cosets and minimal polynomials
    # **************************************************************************

    def cyclotomic_coset(self, s: int) -> List[int]:
        """ ``{s * 2^l mod n}`` in order of generation. """
        coset = []
        value = s % self.n
        while value not in coset:
            coset.append(value)
            value = (2 * value) % self.n
        return coset

    def minimal_polynomial(self, s: int) -> int:
        """ Minimal polynomial of ``alpha^s`` over GF(2), as bitmask. """
        # coefficients (field elements), lowest degree first
        poly = [1]
        for exponent in self.cyclotomic_coset(s):
            root = int(self.exp[exponent])
            shifted = [0] + poly
            scaled = [self.mul(root, c) for c in poly] + [0]
            poly = [a ^ b for a, b in zip(shifted, scaled)]
        if any(c not in (0, 1) for c in poly):
            raise ConstructionError(
                "Minimal polynomial of alpha^{} is not binary.".format(s)
            )
        return sum(c << k for k, c in enumerate(poly))


@functools.lru_cache(maxsize=None)
def field_new(m: int) -> GaloisField:
    """ GF(2^m) with the fixed table modulus. """
    return GaloisField(m)


def gf_mul(a: int, b: int, field: GaloisField) -> int:
    return field.mul(a, b)


def gf_trace(a: int, field: GaloisField) -> int:
    return field.trace(a)
