#!/usr/bin/env python3

""" The Galois ring GR(4, t) = Z4[X]/(h(X)) and the Gray map.

Ring elements are tuples of ``t`` integers mod 4 (coordinates with respect to
``1, xi, ..., xi^(t-1)`` where ``xi`` is the class of ``X``). ``h`` is the
Hensel lift of the binary table polynomial of degree ``t``.
"""

# std
import functools
import itertools
from typing import Dict, Iterator, List, Sequence, Tuple

# 3rd party
import numpy as np

# ours
from kerdocklab.algebra.finite_field import (
    PRIMITIVE_POLYNOMIALS,
    is_primitive,
)
from kerdocklab.algebra.gf2 import poly_degree
from kerdocklab.errors import ConstructionError, UnsupportedParameterError
from kerdocklab.util.log import get_logger

RingElement = Tuple[int, ...]

logger = get_logger("GaloisRing")


def hensel_lift(f: int) -> List[int]:
    """ Hensel lift of a primitive binary polynomial to Z4 via the Graeffe
    relation ``h(X^2) = (-1)^t f(X) f(-X) mod 4``.

    Args:
        f: binary polynomial as bitmask, degree ``t``

    Returns:
        Coefficients of ``h`` mod 4, lowest degree first (monic, length t+1)
    """
    t = poly_degree(f)
    if t < 1 or not is_primitive(f):
        raise ConstructionError(
            "Polynomial {:#b} is not primitive over GF(2).".format(f)
        )
    c = [(f >> k) & 1 for k in range(t + 1)]
    c_neg = [ck if k % 2 == 0 else -ck for k, ck in enumerate(c)]
    product = np.convolve(c, c_neg)
    sign = -1 if t % 2 else 1
    h = [int(sign * product[2 * k]) % 4 for k in range(t + 1)]
    if h[t] != 1:
        raise ConstructionError("Hensel lift of {:#b} is not monic.".format(f))
    return h


class GaloisRing(object):
    """ GR(4, t) for odd ``t`` between 3 and 9, built on the Hensel lift of
    the table polynomial :data:`PRIMITIVE_POLYNOMIALS[t]`.

    Use :func:`ring_new` to obtain cached instances.
    """

    def __init__(self, t: int):
        if t not in PRIMITIVE_POLYNOMIALS or t % 2 == 0:
            raise UnsupportedParameterError(
                "GR(4, t) is supported for odd 3 <= t <= 9, got {}.".format(t)
            )
        self.t = t
        self.f = PRIMITIVE_POLYNOMIALS[t]
        self.h = hensel_lift(self.f)
        if any((hk - ((self.f >> k) & 1)) % 2 for k, hk in enumerate(self.h)):
            raise ConstructionError("Hensel lift does not reduce to f.")

        self.zero = (0,) * t
        self.one = (1,) + (0,) * (t - 1)
        self.xi = (0, 1) + (0,) * (t - 2)

        self.teichmueller = self._build_teichmueller()
        #: residue (mod 2 reduction read as integer) -> Teichmueller element
        self._by_residue = {
            self.residue(u): u for u in self.teichmueller
        }  # type: Dict[int, RingElement]
        if len(self._by_residue) != 2 ** t:
            raise ConstructionError(
                "Teichmueller set does not reduce to GF(2^t) bijectively."
            )
        logger.debug("Constructed GR(4, {}) with h={}.".format(t, self.h))

    def __repr__(self):
        return "GaloisRing(t={}, h={})".format(self.t, self.h)

    def _build_teichmueller(self) -> List[RingElement]:
        q = 2 ** self.t - 1
        elements = [self.zero]
        value = self.one
        for j in range(q):
            if j > 0 and value == self.one:
                raise ConstructionError(
                    "xi has order {} instead of {}.".format(j, q)
                )
            elements.append(value)
            value = self.mul(value, self.xi)
        if value != self.one:
            raise ConstructionError("xi^{} != 1 in GR(4, {}).".format(q, self.t))
        return elements

    # **************************************************************************
    # Arithmetic
    # **************************************************************************

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        return tuple((x + y) % 4 for x, y in zip(a, b))

    def scale(self, c: int, a: RingElement) -> RingElement:
        return tuple((c * x) % 4 for x in a)

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        t = self.t
        prod = [0] * (2 * t - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for k in range(2 * t - 2, t - 1, -1):
            c = prod[k] % 4
            if c:
                for l in range(t):
                    prod[k - t + l] -= c * self.h[l]
            prod[k] = 0
        return tuple(x % 4 for x in prod[:t])

    def elements(self) -> Iterator[RingElement]:
        """ All 4^t elements in lexicographic coordinate order. """
        return itertools.product(range(4), repeat=self.t)

    def residue(self, a: RingElement) -> int:
        """ Reduction mod 2, read as an element of GF(2^t). """
        return sum((x & 1) << k for k, x in enumerate(a))

    def teichmueller_of(self, residue: int) -> RingElement:
        return self._by_residue[residue]

    def split(self, a: RingElement) -> Tuple[RingElement, RingElement]:
        """ 2-adic decomposition ``a = u + 2v`` with ``u, v`` in the
        Teichmueller set. """
        u = self._by_residue[self.residue(a)]
        diff = tuple((x - y) % 4 for x, y in zip(a, u))
        v = self._by_residue[sum((x >> 1) << k for k, x in enumerate(diff))]
        return u, v

    def frobenius(self, a: RingElement) -> RingElement:
        """ ``sigma(u + 2v) = u^2 + 2v^2`` """
        u, v = self.split(a)
        return self.add(self.mul(u, u), self.scale(2, self.mul(v, v)))

    def trace(self, a: RingElement) -> int:
        """ Ring trace ``sum_j sigma^j(a)``, an element of Z4. """
        acc = a
        value = a
        for _ in range(self.t - 1):
            value = self.frobenius(value)
            acc = self.add(acc, value)
        if any(acc[1:]):
            raise ConstructionError("Trace of {} is not in Z4.".format(a))
        return acc[0]

    def trace_matrix(self) -> np.ndarray:
        """ ``M[k, r] = T(xi^k * u_r)`` where ``u_r`` is the Teichmueller
        element with residue ``r``. By Z4-linearity of the trace,
        ``T(lambda * u_r) = sum_k lambda_k M[k, r]``. """
        out = np.zeros((self.t, 2 ** self.t), dtype=np.int64)
        basis = self.xi_powers()
        for r in range(2 ** self.t):
            u = self._by_residue[r]
            for k, b in enumerate(basis):
                out[k, r] = self.trace(self.mul(b, u))
        return out

    def xi_powers(self) -> List[RingElement]:
        """ The coordinate basis ``1, xi, ..., xi^(t-1)``. """
        return [
            tuple(1 if l == k else 0 for l in range(self.t))
            for k in range(self.t)
        ]


@functools.lru_cache(maxsize=None)
def ring_new(t: int) -> GaloisRing:
    return GaloisRing(t)


def ring_trace(a: Sequence[int], ring: GaloisRing) -> int:
    return ring.trace(tuple(int(x) % 4 for x in a))


def gray_map(w: np.ndarray) -> np.ndarray:
    """ Gray image of quaternary words.

    Symbol ``s`` at position ``i`` becomes the bits
    ``0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`` at binary positions ``2i`` and
    ``2i + 1``.

    Args:
        w: integer array of shape ``(..., N)`` with entries in Z4

    Returns:
        boolean array of shape ``(..., 2N)``
    """
    w = np.asarray(w, dtype=np.int64) % 4
    out = np.empty(w.shape[:-1] + (2 * w.shape[-1],), dtype=bool)
    out[..., 0::2] = (w >> 1) & 1
    out[..., 1::2] = (w ^ (w >> 1)) & 1
    return out


def lee_weight(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=np.int64) % 4
    return np.minimum(w, 4 - w).sum(axis=-1)
