#!/usr/bin/env python3

""" Algebraic machinery: the fields GF(2^m), the Galois rings GR(4, t) with
the Gray map, and linear algebra over GF(2). """

from kerdocklab.algebra.finite_field import (
    GaloisField,
    field_new,
    gf_mul,
    gf_trace,
    PRIMITIVE_POLYNOMIALS,
)
from kerdocklab.algebra.galois_ring import (
    GaloisRing,
    ring_new,
    ring_trace,
    hensel_lift,
    gray_map,
    lee_weight,
)
from kerdocklab.algebra.gf2 import XorBasis, gf2_rank, rref, matrix_rank
