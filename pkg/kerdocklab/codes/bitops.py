#!/usr/bin/env python3

""" Bit-packed word arrays.

Codewords of length ``n`` are stored as rows of ``ceil(n/64)`` little-endian
64 bit integers: coordinate ``i`` is bit ``i % 64`` of word ``i // 64``.
Viewed as bytes, this is exactly the least-significant-bit-first layout of
the code file format, and comparing the words from the last to the first
compares the codewords as little-endian integers.
"""

# std
from typing import Iterable, Iterator, List, Optional, Tuple

# 3rd party
import numpy as np

WORD_DTYPE = np.dtype("<u8")

#: Upper bound for the number of 64 bit words materialized at once in
#: pairwise computations.
PAIR_BLOCK_ELEMENTS = 2 ** 22

if hasattr(np, "bitwise_count"):

    def _popcount(x: np.ndarray) -> np.ndarray:
        return np.bitwise_count(x)


else:
    _BYTE_POPCOUNT = np.array(
        [bin(i).count("1") for i in range(256)], dtype=np.uint8
    )

    def _popcount(x: np.ndarray) -> np.ndarray:
        x = np.ascontiguousarray(x, dtype=WORD_DTYPE)
        return _BYTE_POPCOUNT[x.view(np.uint8)].reshape(x.shape + (8,)).sum(
            axis=-1
        )


def n_words(n: int) -> int:
    return max(1, (n + 63) // 64)


def n_bytes(n: int) -> int:
    return (n + 7) // 8


def empty(n: int) -> np.ndarray:
    return np.zeros((0, n_words(n)), dtype=WORD_DTYPE)


def popcount(words: np.ndarray) -> np.ndarray:
    """ Hamming weight of every row. """
    return _popcount(words).sum(axis=-1, dtype=np.int64)


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """ Boolean matrix ``(N, n)`` to packed words ``(N, ceil(n/64))``. """
    bits = np.asarray(bits, dtype=bool)
    if bits.ndim == 1:
        bits = bits[None, :]
    count, n = bits.shape
    packed = np.packbits(bits, axis=1, bitorder="little")
    out = np.zeros((count, 8 * n_words(n)), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view(WORD_DTYPE)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    """ Inverse of :func:`pack_bits`. """
    words = np.ascontiguousarray(words, dtype=WORD_DTYPE)
    as_bytes = words.view(np.uint8).reshape(len(words), -1)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :n].astype(
        bool
    )


def to_bytes(words: np.ndarray, n: int) -> np.ndarray:
    """ ``(N, ceil(n/8))`` uint8 records, least significant bit first. """
    words = np.ascontiguousarray(words, dtype=WORD_DTYPE)
    return words.view(np.uint8).reshape(len(words), -1)[:, : n_bytes(n)]


def from_bytes(records: np.ndarray, n: int) -> np.ndarray:
    records = np.asarray(records, dtype=np.uint8)
    out = np.zeros((len(records), 8 * n_words(n)), dtype=np.uint8)
    out[:, : records.shape[1]] = records
    return out.view(WORD_DTYPE)


def from_ints(values: Iterable[int], n: int) -> np.ndarray:
    """ Python integers (bit ``i`` = coordinate ``i``) to packed words. """
    w = n_words(n)
    values = list(values)
    out = np.zeros((len(values), w), dtype=WORD_DTYPE)
    mask = (1 << 64) - 1
    for r, value in enumerate(values):
        value = int(value)
        if value < 0 or value >> n:
            raise ValueError(
                "Value {} does not fit into {} bits.".format(value, n)
            )
        for k in range(w):
            out[r, k] = (value >> (64 * k)) & mask
    return out


def to_ints(words: np.ndarray) -> List[int]:
    words = np.ascontiguousarray(words, dtype=WORD_DTYPE)
    return [int.from_bytes(row.tobytes(), "little") for row in words]


def mask_word(n: int) -> np.ndarray:
    """ The all-one word of length ``n`` as a single packed row. """
    return pack_bits(np.ones((1, n), dtype=bool))[0]


def bit(words: np.ndarray, i: int) -> np.ndarray:
    """ Column ``i`` as boolean array. """
    return ((words[:, i >> 6] >> np.uint64(i & 63)) & np.uint64(1)).astype(
        bool
    )


def unit_word(n: int, i: int) -> np.ndarray:
    out = np.zeros(n_words(n), dtype=WORD_DTYPE)
    out[i >> 6] = np.uint64(1) << np.uint64(i & 63)
    return out


def sort_order(words: np.ndarray) -> np.ndarray:
    """ Permutation sorting the rows as little-endian integers. """
    if len(words) == 0:
        return np.zeros(0, dtype=np.int64)
    # np.lexsort uses the last key as primary key
    return np.lexsort([words[:, k] for k in range(words.shape[1])])


def canonicalize(words: np.ndarray) -> np.ndarray:
    """ Sorted, duplicate free copy of ``words``. """
    words = np.ascontiguousarray(words, dtype=WORD_DTYPE)
    if len(words) == 0:
        return words.copy()
    words = words[sort_order(words)]
    keep = np.ones(len(words), dtype=bool)
    keep[1:] = np.any(words[1:] != words[:-1], axis=1)
    return np.ascontiguousarray(words[keep])


def is_strictly_increasing(words: np.ndarray) -> Tuple[bool, Optional[int]]:
    """ Check canonical order.

    Returns:
        ``(True, None)`` or ``(False, r)`` with the first row ``r`` that is
        not larger than its predecessor.
    """
    if len(words) < 2:
        return True, None
    a = words[:-1]
    b = words[1:]
    # compare from the most significant word downwards
    decided = np.zeros(len(a), dtype=bool)
    greater = np.zeros(len(a), dtype=bool)
    for k in range(words.shape[1] - 1, -1, -1):
        gt = (b[:, k] > a[:, k]) & ~decided
        lt = (b[:, k] < a[:, k]) & ~decided
        greater |= gt
        decided |= gt | lt
    bad = np.nonzero(~greater)[0]
    if len(bad):
        return False, int(bad[0]) + 1
    return True, None


def block_size(n_other: int, w: int) -> int:
    return max(1, PAIR_BLOCK_ELEMENTS // max(1, n_other * w))


def distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ Hamming distance matrix between the rows of ``a`` and ``b``. """
    return popcount(a[:, None, :] ^ b[None, :, :])


def iter_distance_blocks(
    words: np.ndarray, other: Optional[np.ndarray] = None
) -> Iterator[Tuple[int, np.ndarray]]:
    """ Yield ``(offset, block)`` where ``block[r, s]`` is the distance
    between row ``offset + r`` of ``words`` and row ``s`` of ``other``
    (defaults to ``words``). """
    if other is None:
        other = words
    step = block_size(len(other), words.shape[1])
    for start in range(0, len(words), step):
        yield start, distances(words[start : start + step], other)


def span(basis: np.ndarray) -> np.ndarray:
    """ All GF(2) combinations of the rows of ``basis`` (not canonicalized).
    Row ``r`` of the output is the combination selected by the bits of
    ``r``. """
    out = np.zeros((1, basis.shape[1]), dtype=WORD_DTYPE)
    for row in basis:
        out = np.concatenate([out, out ^ row[None, :]])
    return out
