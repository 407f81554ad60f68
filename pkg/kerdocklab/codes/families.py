#!/usr/bin/env python3

""" Constructions of the code families: first order Reed-Muller codes,
Kerdock codes (Gray images of the quaternary Kerdock codes), the BCH codes
C_{1,3} and the trace codes C_{1,e}^perp. """

# std
import functools
import itertools
import math
from typing import List, Union

# 3rd party
import numpy as np

# ours
from kerdocklab.algebra.finite_field import field_new, GaloisField
from kerdocklab.algebra.galois_ring import ring_new, gray_map
from kerdocklab.algebra.gf2 import clmul, poly_degree, matrix_rank
from kerdocklab.codes import bitops
from kerdocklab.codes.code import Code
from kerdocklab.errors import ConstructionError, UnsupportedParameterError
from kerdocklab.util.log import get_logger

logger = get_logger("families")

#: Largest dimension for which linear codes are enumerated.
MAX_ENUMERATION_DIMENSION = 24


def _check_m(m: int, low: int = 3, high: int = 10) -> None:
    if not isinstance(m, int) or not low <= m <= high:
        raise UnsupportedParameterError(
            "m={} outside of the supported range [{}, {}].".format(m, low, high)
        )


# ******************************************************************************
# Reed-Muller
# ******************************************************************************


def coordinate_functions(m: int) -> np.ndarray:
    """ Packed words ``x_k`` with bit ``j`` equal to bit ``k`` of ``j``, for
    ``k < m`` (length ``2^m``). """
    j = np.arange(2 ** m)
    bits = np.array([(j >> k) & 1 for k in range(m)], dtype=bool)
    return bitops.pack_bits(bits)


def build_rm1(m: int) -> Code:
    """ RM(1, m): evaluations ``<a, v> + eps`` of all affine functions, with
    coordinate ``j`` standing for the vector ``v`` with integer value
    ``j``. """
    _check_m(m)
    n = 2 ** m
    basis = np.concatenate([bitops.mask_word(n)[None, :], coordinate_functions(m)])
    code = Code(
        bitops.span(basis),
        n=n,
        family="RM1",
        params={"m": m},
        linear=True,
    )
    logger.debug("Built {}.".format(code))
    return code


def coset_keys(words: np.ndarray, m: int) -> np.ndarray:
    """ Canonical representatives of the cosets of RM(1, m) containing the
    given words.

    RM(1, m) has the information set ``{0, 1, 2, 4, ..., 2^(m-1)}``: the
    all-one word is the only basis word with a one at coordinate 0, and
    ``x_k`` is the only one with a one at ``2^k``. Clearing these coordinates
    in that order maps every word to the unique coset member that vanishes
    on the information set.
    """
    n = 2 ** m
    keys = np.array(words, dtype=bitops.WORD_DTYPE, copy=True)
    one = bitops.mask_word(n)
    sel = bitops.bit(keys, 0)
    keys[sel] ^= one
    for k, fk in enumerate(coordinate_functions(m)):
        sel = bitops.bit(keys, 1 << k)
        keys[sel] ^= fk
    return keys


# ******************************************************************************
# Kerdock
# ******************************************************************************


def kerdock_parameters(m: int):
    """ ``(n, d)`` of the Kerdock code of length ``2^m``. """
    n = 2 ** m
    return n, (n - 2 ** (m // 2)) // 2


def build_kerdock(m: int, self_check: bool = True) -> Code:
    """ Kerdock code of length ``n = 2^m`` for even ``4 <= m <= 8``.

    Quaternary codewords are ``eps * 1 + (T(lambda u))_u`` for all ``lambda``
    in GR(4, m-1) and ``eps`` in Z4, where ``u`` runs over the Teichmueller
    set ordered by the integer value of its reduction mod 2. The binary code
    is the Gray image; with this ordering RM(1, m) (as built by
    :func:`build_rm1`) is a subcode.

    Args:
        m: even, 4 <= m <= 8
        self_check: verify coset structure and weights before returning

    Returns:
        :class:`~kerdocklab.codes.Code` of size ``n^2``
    """
    if not isinstance(m, int) or m % 2 or not 4 <= m <= 8:
        raise UnsupportedParameterError(
            "Kerdock codes are built for even 4 <= m <= 8, got m={}.".format(m)
        )
    t = m - 1
    n = 2 ** m
    ring = ring_new(t)
    trace_matrix = ring.trace_matrix()
    lambdas = np.array(list(itertools.product(range(4), repeat=t)), dtype=np.int64)
    traces = (lambdas @ trace_matrix) % 4
    symbols = (traces[None, :, :] + np.arange(4)[:, None, None]) % 4
    symbols = symbols.reshape(-1, 2 ** t)
    code = Code.from_bits(
        gray_map(symbols),
        family="Kerdock",
        params={"m": m},
        distance_invariant=True,
    )
    if code.size != n * n:
        raise ConstructionError(
            "Kerdock construction produced {} distinct words instead of "
            "{}.".format(code.size, n * n)
        )
    if self_check:
        # deferred, the analysis package depends on this module
        from kerdocklab.analysis.structure import kerdock_self_check

        kerdock_self_check(code, m)
    logger.debug("Built {}.".format(code))
    return code


# ******************************************************************************
# BCH and trace codes
# ******************************************************************************


class ParityCheckCode(object):
    """ Linear code given by a parity check matrix only, for codes too large
    to enumerate.

    Attributes:
        n: length
        columns: syndrome of every unit vector as integer (``2m`` bits)
        dimension: ``n - rank(H)``
        designed_distance: minimum distance guaranteed by the construction
    """

    def __init__(
        self,
        n: int,
        columns: np.ndarray,
        dimension: int,
        designed_distance: int,
        family: str = "derived",
        params=None,
    ):
        self.n = n
        self.columns = np.asarray(columns, dtype=np.int64)
        self.columns.setflags(write=False)
        self.dimension = dimension
        self.designed_distance = designed_distance
        self.family = family
        self.params = dict(params or {})
        self.linear = True

    def __repr__(self):
        return "ParityCheckCode(family={!r}, n={}, k={}, params={})".format(
            self.family, self.n, self.dimension, self.params
        )

    @property
    def redundancy(self) -> int:
        return self.n - self.dimension

    def syndrome(self, support) -> int:
        s = 0
        for i in support:
            s ^= int(self.columns[i])
        return s

    def __contains__(self, word: int) -> bool:
        return self.syndrome(i for i in range(self.n) if (word >> i) & 1) == 0

    def parity_check_matrix(self) -> np.ndarray:
        rows = poly_degree(int(self.columns.max())) + 1
        return np.array(
            [(self.columns >> r) & 1 for r in range(rows)], dtype=bool
        )

    def describe(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "n": self.n,
            "dimension": self.dimension,
            "designed_distance": self.designed_distance,
        }


def bch_c13_columns(field: GaloisField) -> np.ndarray:
    """ Syndromes ``alpha^j | alpha^(3j) << m`` of the unit vectors. """
    return field.alpha_powers(1) | (field.alpha_powers(3) << field.m)


def bch_c13_generator(field: GaloisField) -> int:
    """ Generator polynomial ``m_1 m_3`` of C_{1,3} (as bitmask). """
    m = field.m
    m1 = field.minimal_polynomial(1)
    m3 = field.minimal_polynomial(3)
    if poly_degree(m1) != m or poly_degree(m3) != m:
        raise ConstructionError(
            "Degenerate BCH parameters for m={}: minimal polynomial degrees "
            "{} and {}.".format(m, poly_degree(m1), poly_degree(m3))
        )
    # distinct cyclotomic cosets, so lcm = product
    return clmul(m1, m3)


def build_bch_c13(
    m: int, max_dimension: int = MAX_ENUMERATION_DIMENSION
) -> Union[Code, ParityCheckCode]:
    """ Primitive BCH code C_{1,3} of length ``2^m - 1`` with zeros
    ``alpha`` and ``alpha^3``.

    Returns:
        enumerated :class:`~kerdocklab.codes.Code` if the dimension is at
        most ``max_dimension``, else a :class:`ParityCheckCode`.
    """
    _check_m(m)
    field = field_new(m)
    n = field.n
    g = bch_c13_generator(field)
    columns = bch_c13_columns(field)
    h = np.array([(columns >> r) & 1 for r in range(2 * m)], dtype=bool)
    if matrix_rank(h) != 2 * m:
        raise ConstructionError("Parity check matrix of C_1,3 is degenerate.")
    k = n - poly_degree(g)
    params = {"m": m}
    if k > max_dimension:
        logger.debug(
            "C_1,3 with m={} has dimension {} > {}, returning parity check "
            "description.".format(m, k, max_dimension)
        )
        return ParityCheckCode(
            n=n,
            columns=columns,
            dimension=k,
            designed_distance=5,
            family="BCH13",
            params=params,
        )
    generator_rows = [g << i for i in range(k)]
    for row in generator_rows:
        support = [i for i in range(n) if (row >> i) & 1]
        s = 0
        for i in support:
            s ^= int(columns[i])
        if s:
            raise ConstructionError("Generator row violates parity checks.")
    code = Code(
        bitops.span(bitops.from_ints(generator_rows, n)),
        n=n,
        family="BCH13",
        params=params,
        linear=True,
    )
    if code.size != 2 ** k:
        raise ConstructionError("C_1,3 generator rows are dependent.")
    logger.debug("Built {}.".format(code))
    return code


def gold_exponent(j: int) -> int:
    return 2 ** j + 1


def validate_exponent(m: int, e: int) -> None:
    """ Gold exponents ``2^j + 1`` need ``gcd(j, m) = 1``. """
    if not 1 <= e < 2 ** m - 1:
        raise UnsupportedParameterError(
            "Exponent {} out of range for m={}.".format(e, m)
        )
    j = (e - 1).bit_length() - 1
    if e == gold_exponent(j) and j >= 1 and math.gcd(j, m) != 1:
        raise UnsupportedParameterError(
            "Gold exponent 2^{}+1 requires gcd({}, {}) = 1.".format(j, j, m)
        )


def trace_dual_basis(m: int, e: int = 3) -> np.ndarray:
    """ Boolean ``(2m, 2^m-1)`` generator matrix of C_{1,e}^perp with rows
    ``Tr(X^k x)`` and ``Tr(X^k x^e)`` for ``x = alpha^j``. """
    field = field_new(m)
    j = np.arange(field.n)
    rows = [field.trace_array(field.exp[(k + j) % field.n]) for k in range(m)]
    rows += [
        field.trace_array(field.exp[(k + e * j) % field.n]) for k in range(m)
    ]
    return np.array(rows, dtype=bool)


def build_trace_dual(m: int, e: int = 3) -> Code:
    """ The code ``{(Tr(a x + b x^e))_x : a, b in GF(2^m)}`` with ``x``
    running over ``alpha^0, ..., alpha^(2^m-2)``. For ``e = 3`` this is the
    dual of C_{1,3}.

    Raises:
        ConstructionError: if ``(a, b) -> codeword`` is not injective
    """
    _check_m(m)
    validate_exponent(m, e)
    basis = trace_dual_basis(m, e)
    if matrix_rank(basis) != 2 * m:
        raise ConstructionError(
            "Trace map for m={}, e={} is not injective.".format(m, e)
        )
    n = 2 ** m - 1
    code = Code(
        bitops.span(bitops.pack_bits(basis)),
        n=n,
        family="TraceDual({})".format(e),
        params={"m": m, "e": e},
        linear=True,
    )
    if code.size != 4 ** m:
        raise ConstructionError("Trace code has {} words.".format(code.size))
    logger.debug("Built {}.".format(code))
    return code


@functools.lru_cache(maxsize=8)
def cached_family(family: str, m: int, e: int = 3):
    """ Memoized builders keyed by family name as used on the command line
    (``rm1``, ``kerdock``, ``bch13``, ``bch13-dual``, ``gold-dual``). """
    if family == "rm1":
        return build_rm1(m)
    elif family == "kerdock":
        return build_kerdock(m)
    elif family == "bch13":
        return build_bch_c13(m)
    elif family == "bch13-dual":
        return build_trace_dual(m, 3)
    elif family == "gold-dual":
        return build_trace_dual(m, e)
    raise UnsupportedParameterError("Unknown family {!r}.".format(family))


FAMILIES = ["rm1", "kerdock", "bch13", "bch13-dual", "gold-dual"]  # type: List[str]
