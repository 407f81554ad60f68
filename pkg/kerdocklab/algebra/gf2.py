#!/usr/bin/env python3

""" Linear algebra over GF(2).

Two representations are used throughout:

* rows as python integers (bit ``i`` of the integer is column ``i``), used
  for incremental span/rank computations, and
* boolean numpy matrices, used for Gaussian elimination of generator and
  parity check matrices.
"""

# std
from typing import Dict, Iterable, List, Optional, Tuple

# 3rd party
import numpy as np


def clmul(a: int, b: int) -> int:
    """ Carry-less product of two binary polynomials given as bitmasks. """
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a: int, modulus: int) -> int:
    """ Remainder of the binary polynomial ``a`` modulo ``modulus``. """
    deg = modulus.bit_length() - 1
    while a.bit_length() - 1 >= deg:
        a ^= modulus << (a.bit_length() - 1 - deg)
    return a


def poly_degree(a: int) -> int:
    return a.bit_length() - 1


class XorBasis(object):
    """ Incrementally built basis of a subspace of GF(2)^n, rows stored as
    python integers in echelon form (each row has a distinct leading bit).

    .. code-block:: python

        basis = XorBasis()
        for row in rows:
            basis.add(row)
        basis.rank
    """

    def __init__(self, rows: Iterable[int] = ()):
        #: leading bit -> row
        self._rows = {}  # type: Dict[int, int]
        for row in rows:
            self.add(row)

    def reduce(self, v: int) -> int:
        """ Reduce ``v`` modulo the current basis. Zero iff ``v`` lies in
        the span. """
        while v:
            lead = v.bit_length() - 1
            row = self._rows.get(lead)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """ Add ``v`` to the basis. Returns True if the rank increased. """
        v = self.reduce(int(v))
        if not v:
            return False
        self._rows[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(int(v)) == 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> List[int]:
        return [self._rows[k] for k in sorted(self._rows)]


def gf2_rank(rows: Iterable[int], stop_at: Optional[int] = None) -> int:
    """ Rank of a set of rows given as integers.

    Args:
        rows: Rows
        stop_at: Stop as soon as this rank is reached (useful if the maximal
            possible rank is known).
    """
    basis = XorBasis()
    for row in rows:
        basis.add(row)
        if stop_at is not None and basis.rank >= stop_at:
            break
    return basis.rank


def rref(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """ Reduced row echelon form of a boolean matrix.

    Returns:
        Tuple of the nonzero rows of the reduced matrix and the list of
        pivot columns.
    """
    m = np.array(matrix, dtype=bool, copy=True)
    n_rows, n_cols = m.shape
    pivots = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        candidates = np.nonzero(m[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot = row + candidates[0]
        if pivot != row:
            m[[row, pivot]] = m[[pivot, row]]
        others = np.nonzero(m[:, col])[0]
        others = others[others != row]
        m[others] ^= m[row]
        pivots.append(col)
        row += 1
    return m[:row], pivots


def matrix_rank(matrix: np.ndarray) -> int:
    return len(rref(matrix)[1])


def bits_to_ints(matrix: np.ndarray) -> List[int]:
    """ Rows of a boolean matrix as integers, column ``i`` becoming bit
    ``i``. """
    weights = [1 << i for i in range(matrix.shape[1])]
    return [
        sum(w for w, bit in zip(weights, row) if bit)
        for row in np.asarray(matrix, dtype=bool)
    ]


def ints_to_bits(rows: Iterable[int], n: int) -> np.ndarray:
    rows = list(rows)
    out = np.zeros((len(rows), n), dtype=bool)
    for r, value in enumerate(rows):
        for i in range(n):
            if (value >> i) & 1:
                out[r, i] = True
    return out
