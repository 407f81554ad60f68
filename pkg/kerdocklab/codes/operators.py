#!/usr/bin/env python3

""" Operators deriving new codes (puncture, shorten, translate, extension by
the all-one translate) and the basic analyzers (distance set, kernel). """

# std
from typing import Set, Tuple

# 3rd party
import numpy as np

# ours
from kerdocklab.algebra.gf2 import gf2_rank
from kerdocklab.codes import bitops
from kerdocklab.codes.code import Code, Codeword, WeightDistribution
from kerdocklab.errors import (
    CoordinateError,
    LengthMismatchError,
    NotLinearError,
    SizeCapError,
)

#: Largest nonlinear code whose distance set is computed from all pairs.
MAX_DISTANCE_SET_SIZE = 2 ** 20


def _derived_params(code: Code, step: str) -> dict:
    params = dict(code.params)
    params["derivation"] = list(code.params.get("derivation", [])) + [step]
    if "family" not in params:
        params["family"] = code.family
    return params


def _check_coordinate(code: Code, i: int) -> None:
    if not 0 <= i < code.n:
        raise CoordinateError(
            "Coordinate {} out of range for length {}.".format(i, code.n)
        )
    if code.n == 1:
        raise CoordinateError("Can't delete the only coordinate.")


def puncture(code: Code, i: int) -> Code:
    """ Delete coordinate ``i`` from all codewords (duplicates merge). """
    _check_coordinate(code, i)
    bits = np.delete(code.bits(), i, axis=1)
    return Code.from_bits(
        bits,
        params=_derived_params(code, "puncture({})".format(i)),
        linear=code.linear,
    )


def shorten(code: Code, i: int) -> Code:
    """ Keep the codewords with a zero at ``i`` and delete coordinate
    ``i``. """
    _check_coordinate(code, i)
    keep = ~code.column(i)
    bits = np.delete(bitops.unpack_bits(code.words[keep], code.n), i, axis=1)
    return Code.from_bits(
        bits.reshape(-1, code.n - 1),
        params=_derived_params(code, "shorten({})".format(i)),
        linear=code.linear,
    )


def _word_row(code: Code, v) -> np.ndarray:
    if isinstance(v, (int, np.integer)):
        if int(v) < 0 or int(v) >> code.n:
            raise LengthMismatchError(
                "Word {} is longer than {} bits.".format(v, code.n)
            )
        return bitops.from_ints([int(v)], code.n)[0]
    v = np.asarray(v)
    if v.dtype == bool:
        if v.shape != (code.n,):
            raise LengthMismatchError(
                "Word of length {} for code of length {}.".format(
                    v.shape[-1], code.n
                )
            )
        return bitops.pack_bits(v)[0]
    if v.shape != (bitops.n_words(code.n),):
        raise LengthMismatchError("Packed word has wrong shape.")
    return v.astype(bitops.WORD_DTYPE)


def translate(code: Code, v) -> Code:
    """ ``{c + v : c in C}``.

    Args:
        code: Code
        v: word as integer, boolean vector of length n or packed row
    """
    row = _word_row(code, v)
    return Code(
        code.words ^ row[None, :],
        n=code.n,
        params=_derived_params(code, "translate"),
    )


def kernel_contains(code: Code, v) -> bool:
    """ ``v in Ker(C)``, i.e. ``C + v = C``. """
    row = _word_row(code, v)
    if code.size == 0:
        return True
    # cheap rejection: the first word must be mapped into the code
    if not code.contains_words((code.words[:1] ^ row[None, :]))[0]:
        return False
    return bool(code.contains_words(code.words ^ row[None, :]).all())


def kernel(code: Code) -> Code:
    """ The kernel ``Ker(C) = {v : v + C = C}`` as a linear code.

    Candidates are ``c + c_0`` for a fixed codeword ``c_0``; each candidate is
    first tested on a few words via the hash index.
    """
    if code.size == 0:
        return Code(bitops.empty(code.n), n=code.n, linear=True)
    words = code.words
    candidates = words ^ words[:1]
    head = words[: min(32, code.size)]
    members = []
    for v in candidates:
        if not code.contains_words(head ^ v[None, :]).all():
            continue
        if code.contains_words(words ^ v[None, :]).all():
            members.append(v)
    return Code(
        np.array(members, dtype=bitops.WORD_DTYPE).reshape(
            -1, bitops.n_words(code.n)
        ),
        n=code.n,
        params=_derived_params(code, "kernel"),
        linear=True,
    )


def is_linear(code: Code) -> bool:
    """ The code contains 0 and its words span a space of exactly ``|C|``
    elements. """
    if code.linear:
        return True
    size = code.size
    if size == 0 or size & (size - 1) or 0 not in code:
        return False
    dimension = size.bit_length() - 1
    return gf2_rank(code.ints(), stop_at=dimension + 1) == dimension


def as_linear(code: Code) -> Code:
    """ Copy of the code flagged as linear.

    Raises:
        NotLinearError
    """
    if code.linear:
        return code
    if not is_linear(code):
        raise NotLinearError(
            "{} is not linear ({} words span a larger space or miss the zero "
            "word).".format(code, code.size)
        )
    return Code(
        code.words,
        n=code.n,
        family=code.family,
        params=code.params,
        linear=True,
        canonical=True,
    )


def weight_distribution(code: Code) -> WeightDistribution:
    return code.weight_distribution()


def distance_set(code: Code) -> Set[int]:
    """ ``I(C) = {d(x, y) : x, y in C}``.

    Codes that are distance invariant (linear codes, Gray images of
    Z4-linear codes) use their weights; all other codes are enumerated
    pairwise.
    """
    if code.size == 0:
        return set()
    if code.distance_invariant:
        return set(int(w) for w in np.unique(code.weights())) | {0}
    if code.size > MAX_DISTANCE_SET_SIZE:
        raise SizeCapError(
            "Distance set of a nonlinear code with {} > {} words.".format(
                code.size, MAX_DISTANCE_SET_SIZE
            )
        )
    found = set()
    for _, block in bitops.iter_distance_blocks(code.words):
        found.update(int(d) for d in np.unique(block))
    return found


def complement_precondition(code: Code) -> Tuple[bool, Set[int]]:
    """ Check ``I(C)`` against ``{n - i : i in I(C)}``.

    Returns:
        ``(holds, overlap)`` where ``holds`` is True iff the overlap is empty.
    """
    distances = distance_set(code)
    mirrored = {code.n - i for i in distances}
    overlap = distances & mirrored
    return not overlap, overlap


class ComplementExtension(object):
    """ Result of :func:`extend_complement`.

    Attributes:
        code: ``C union (1 + C)``
        precondition_holds: distance sets of ``C`` and its mirror are
            disjoint
        overlap: their intersection
        classes: for every word of ``code``, 0 if it lies in ``C`` and 1 if
            it lies in ``1 + C`` only
    """

    def __init__(self, code: Code, precondition_holds: bool, overlap, classes):
        self.code = code
        self.precondition_holds = precondition_holds
        self.overlap = set(overlap)
        self.classes = classes

    def __repr__(self):
        return "ComplementExtension({}, precondition_holds={}, overlap={})".format(
            self.code, self.precondition_holds, sorted(self.overlap)
        )


def extend_complement(code: Code) -> ComplementExtension:
    """ ``C union (1^n + C)`` together with the verdict of
    :func:`complement_precondition`. """
    one = bitops.mask_word(code.n)
    extended = Code(
        np.concatenate([code.words, code.words ^ one[None, :]]),
        n=code.n,
        params=_derived_params(code, "extend_complement"),
        linear=code.linear,
    )
    classes = (~code.contains_words(extended.words)).astype(np.int8)
    holds, overlap = complement_precondition(code)
    return ComplementExtension(extended, holds, overlap, classes)


def flip_bits(code: Code, rows, coordinates) -> Code:
    """ Copy of the code where the given (row, coordinate) bits are flipped.
    Used for fault injection in tests. """
    words = np.array(code.words, copy=True)
    for r, i in zip(rows, coordinates):
        words[r, i >> 6] ^= np.uint64(1) << np.uint64(i & 63)
    return Code(words, n=code.n, family=code.family, params=code.params)
