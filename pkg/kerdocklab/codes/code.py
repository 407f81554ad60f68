#!/usr/bin/env python3

""" Binary codes as immutable, canonically sorted sets of packed words. """

# std
from collections.abc import Mapping
from fractions import Fraction
import numbers
from typing import Dict, Iterable, Iterator, List, Optional, Union

# 3rd party
import numpy as np
import sympy

# ours
from kerdocklab.codes import bitops
from kerdocklab.errors import LengthMismatchError, SizeCapError
from kerdocklab.util.log import get_logger

#: A codeword as python integer, bit ``i`` being coordinate ``i``.
Codeword = int

#: Largest code for which pairwise distances are enumerated exhaustively.
MAX_PAIRWISE_SIZE = 2 ** 17

#: Largest supported code length.
MAX_LENGTH = 1024

logger = get_logger("Code")


class WeightDistribution(Mapping):
    """ Map weight -> count of a code of length ``n``.

    Counts are exact: integers for weight distributions of codes,
    ``sympy.Rational`` for MacWilliams transforms (which are integral only
    for formally self-dual pairs and linear codes).
    Weights with count zero are not stored.
    """

    def __init__(self, counts: Mapping, n: int):
        self.n = int(n)
        clean = {}
        for weight, count in counts.items():
            weight = int(weight)
            if not 0 <= weight <= self.n:
                raise ValueError(
                    "Weight {} outside of [0, {}].".format(weight, self.n)
                )
            if isinstance(count, numbers.Integral):
                count = sympy.Integer(int(count))
            elif isinstance(count, Fraction):
                count = sympy.Rational(count.numerator, count.denominator)
            else:
                count = sympy.Rational(count)
            if count != 0:
                clean[weight] = count
        self._counts = {w: clean[w] for w in sorted(clean)}

    def __getitem__(self, weight: int):
        return self._counts[weight]

    def __iter__(self) -> Iterator[int]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other):
        if isinstance(other, WeightDistribution):
            return self.n == other.n and self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {int(k): v for k, v in other.items()}
        return NotImplemented

    def __repr__(self):
        return "WeightDistribution(n={}, {})".format(
            self.n, self.to_dict()
        )

    @property
    def total(self):
        return sum(self._counts.values(), sympy.Integer(0))

    @property
    def is_integral(self) -> bool:
        return all(c.is_integer for c in self._counts.values())

    def nontrivial_weights(self) -> List[int]:
        """ Weights other than 0 and n. """
        return [w for w in self._counts if w not in (0, self.n)]

    def items(self):
        """ ``(weight, count)`` pairs; integral counts as python ``int``. """
        return [
            (w, int(c) if c.is_integer else c) for w, c in self._counts.items()
        ]

    def to_dict(self) -> Dict[str, Union[int, str]]:
        """ JSON compatible form with string keys. """
        return {
            str(w): int(c) if c.is_integer else str(c)
            for w, c in self._counts.items()
        }

    @classmethod
    def from_dict(cls, d: Mapping, n: int) -> "WeightDistribution":
        return cls({int(k): sympy.Rational(v) for k, v in d.items()}, n=n)

    @classmethod
    def from_weights(cls, weights: np.ndarray, n: int) -> "WeightDistribution":
        values, counts = np.unique(np.asarray(weights), return_counts=True)
        return cls(
            {int(w): int(c) for w, c in zip(values, counts)}, n=n
        )

    def enumerator(self, x=None, y=None) -> sympy.Poly:
        """ Homogeneous weight enumerator ``sum_w A_w x^(n-w) y^w``. """
        if x is None or y is None:
            x, y = sympy.symbols("x y")
        expr = sum(
            (c * x ** (self.n - w) * y ** w for w, c in self._counts.items()),
            sympy.Integer(0),
        )
        return sympy.Poly(expr, x, y)


class Code(object):
    """ Binary code of length ``n``.

    The codewords are kept as bit-packed rows (see
    :mod:`kerdocklab.codes.bitops`), sorted ascending as little-endian
    integers without duplicates. Instances are immutable; derived quantities
    (weights, minimum distance, membership index) are cached.

    Args:
        words: packed words, shape ``(N, ceil(n/64))``
        n: length
        family: family tag, e.g. ``"RM1"``, ``"Kerdock"``, ``"BCH13"``,
            ``"TraceDual(3)"`` or ``"derived"``
        params: construction parameters (JSON compatible)
        linear: the code is known to be linear
        distance_invariant: the distances from any codeword are the weights
            of the code (true for linear codes and Gray images of
            Z4-linear codes)
        canonical: ``words`` is already sorted and duplicate free
    """

    def __init__(
        self,
        words: np.ndarray,
        n: int,
        family: str = "derived",
        params: Optional[dict] = None,
        linear: bool = False,
        distance_invariant: bool = False,
        canonical: bool = False,
    ):
        if not 0 < n <= MAX_LENGTH:
            raise ValueError(
                "Code length must be in [1, {}], got {}.".format(MAX_LENGTH, n)
            )
        words = np.asarray(words, dtype=bitops.WORD_DTYPE)
        if words.ndim != 2 or words.shape[1] != bitops.n_words(n):
            raise LengthMismatchError(
                "Packed words of shape {} don't fit length {}.".format(
                    words.shape, n
                )
            )
        if not canonical:
            words = bitops.canonicalize(words)
        words.setflags(write=False)
        self._words = words
        self.n = n
        self.family = family
        self.params = dict(params or {})
        self.linear = linear
        self.distance_invariant = distance_invariant or linear
        self._weights = None  # type: Optional[np.ndarray]
        self._index = None  # type: Optional[Dict[bytes, int]]
        self._min_distance = None  # type: Optional[int]

    # **************************************************************************
    # Constructors
    # **************************************************************************

    @classmethod
    def from_bits(cls, bits: np.ndarray, **kwargs) -> "Code":
        bits = np.asarray(bits, dtype=bool)
        return cls(bitops.pack_bits(bits), n=bits.shape[1], **kwargs)

    @classmethod
    def from_ints(cls, values: Iterable[int], n: int, **kwargs) -> "Code":
        return cls(bitops.from_ints(values, n), n=n, **kwargs)

    @classmethod
    def from_strings(cls, strings: Iterable[str], **kwargs) -> "Code":
        """ From strings like ``"0110"``, character ``i`` being coordinate
        ``i``. """
        strings = list(strings)
        bits = np.array([[c == "1" for c in s] for s in strings], dtype=bool)
        return cls.from_bits(bits, **kwargs)

    # **************************************************************************
    # Basic properties
    # **************************************************************************

    @property
    def words(self) -> np.ndarray:
        """ Packed words (read only). """
        return self._words

    @property
    def size(self) -> int:
        return len(self._words)

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self) -> Iterator[Codeword]:
        return iter(bitops.to_ints(self._words))

    def __repr__(self):
        return "Code(family={!r}, n={}, size={}{})".format(
            self.family,
            self.n,
            self.size,
            ", params={}".format(self.params) if self.params else "",
        )

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and np.array_equal(
            self._words, other._words
        )

    __hash__ = None

    def bits(self) -> np.ndarray:
        """ Codewords as boolean matrix of shape ``(size, n)``. """
        return bitops.unpack_bits(self._words, self.n)

    def ints(self) -> List[Codeword]:
        return bitops.to_ints(self._words)

    def column(self, i: int) -> np.ndarray:
        return bitops.bit(self._words, i)

    def describe(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "n": self.n,
            "size": self.size,
            "linear": self.linear,
        }

    # **************************************************************************
    # Membership
    # **************************************************************************

    @property
    def index(self) -> Dict[bytes, int]:
        """ Hash index: packed row bytes -> row number. """
        if self._index is None:
            self._index = {row.tobytes(): r for r, row in enumerate(self._words)}
        return self._index

    def _as_row(self, word) -> np.ndarray:
        if isinstance(word, numbers.Integral):
            return bitops.from_ints([int(word)], self.n)[0]
        word = np.asarray(word)
        if word.dtype == bool:
            if word.shape != (self.n,):
                raise LengthMismatchError(
                    "Word of length {} for code of length {}.".format(
                        word.shape[-1], self.n
                    )
                )
            return bitops.pack_bits(word)[0]
        if word.shape != (bitops.n_words(self.n),):
            raise LengthMismatchError("Packed word of wrong shape.")
        return word.astype(bitops.WORD_DTYPE)

    def __contains__(self, word) -> bool:
        try:
            row = self._as_row(word)
        except ValueError:
            return False
        return row.tobytes() in self.index

    def contains_words(self, words: np.ndarray) -> np.ndarray:
        """ Membership of every row of a packed array. """
        index = self.index
        words = np.ascontiguousarray(words, dtype=bitops.WORD_DTYPE)
        return np.array([row.tobytes() in index for row in words], dtype=bool)

    # **************************************************************************
    # Weights and distances
    # **************************************************************************

    def weights(self) -> np.ndarray:
        """ Hamming weight of every codeword (read only). """
        if self._weights is None:
            weights = bitops.popcount(self._words)
            weights.setflags(write=False)
            self._weights = weights
        return self._weights

    def weight_distribution(self) -> WeightDistribution:
        return WeightDistribution.from_weights(self.weights(), self.n)

    def with_weight(self, weight: int) -> "Code":
        """ Subcode of all words of weight ``weight``. """
        return self.subset(self.weights() == weight)

    def subset(self, mask: np.ndarray, family: str = "derived") -> "Code":
        """ Code formed by the rows selected by a boolean mask or an index
        array. """
        return Code(
            self._words[mask],
            n=self.n,
            family=family,
            params=self.params,
            canonical=True,
        )

    @property
    def min_distance(self) -> Optional[int]:
        """ Exact minimum distance, None for codes with less than two
        words. """
        if self._min_distance is None and self.size >= 2:
            self._min_distance = self._compute_min_distance()
        return self._min_distance

    def _compute_min_distance(self) -> int:
        if self.distance_invariant:
            weights = self.weights()
            return int(weights[weights > 0].min())
        if self.size > MAX_PAIRWISE_SIZE:
            raise SizeCapError(
                "Minimum distance of a code with {} words would need "
                "pairwise enumeration.".format(self.size)
            )
        best = self.n + 1
        for offset, block in bitops.iter_distance_blocks(self._words):
            rows = np.arange(len(block))
            block = block.copy()
            block[rows, offset + rows] = self.n + 1
            best = min(best, int(block.min()))
        return best
