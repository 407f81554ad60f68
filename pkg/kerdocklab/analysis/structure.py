#!/usr/bin/env python3

""" Structural properties of Kerdock codes K of length n = 2^m:

* union of n/2 cosets of RM(1, m),
* the weight n/2 words together with 0 and 1 form RM(1, m),
* distances between cosets are d or n - d, within a coset n/2 or n,
* RM(1, m) lies in the kernel,
* closure: x + y is in K whenever d(x, y) = n/2.

Every check returns a :class:`PropertyVerdict`; exhaustive checks look at
all pairs, sampled checks at a seeded random selection.
"""

# std
import math
from typing import Optional

# 3rd party
import numpy as np

# ours
from kerdocklab.codes import bitops
from kerdocklab.codes.code import Code
from kerdocklab.codes.families import build_rm1, coset_keys, kerdock_parameters
from kerdocklab.codes.operators import kernel_contains
from kerdocklab.errors import ConstructionError
from kerdocklab.util.log import get_logger

logger = get_logger("structure")

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"


class PropertyVerdict(object):
    """ Outcome of a structural check. """

    def __init__(self, name: str, holds: bool, mode: str, checked: int, **details):
        self.name = name
        self.holds = bool(holds)
        self.mode = mode
        #: number of objects (pairs, cosets, words) looked at
        self.checked = int(checked)
        self.details = details

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return "PropertyVerdict({!r}, holds={}, mode={}, checked={})".format(
            self.name, self.holds, self.mode, self.checked
        )

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "holds": self.holds,
            "mode": self.mode,
            "checked": self.checked,
        }
        out.update(self.details)
        return out


def _length_parameter(code: Code) -> int:
    m = int(round(math.log2(code.n)))
    if 2 ** m != code.n:
        raise ValueError("Length {} is not a power of two.".format(code.n))
    return m


def coset_ids(code: Code, m: Optional[int] = None) -> np.ndarray:
    """ Index of the RM(1, m) coset of every codeword (numbered by sorted
    coset representative). """
    if m is None:
        m = _length_parameter(code)
    keys = coset_keys(code.words, m)
    _, ids = np.unique(keys, axis=0, return_inverse=True)
    return ids.reshape(-1)


def check_coset_union(code: Code, m: Optional[int] = None) -> PropertyVerdict:
    """ The code is a disjoint union of exactly n/2 cosets of RM(1, m). """
    if m is None:
        m = _length_parameter(code)
    n = code.n
    ids = coset_ids(code, m)
    sizes = np.bincount(ids)
    holds = len(sizes) == n // 2 and bool(np.all(sizes == 2 * n))
    return PropertyVerdict(
        "rm-coset-union",
        holds,
        EXHAUSTIVE,
        code.size,
        cosets=int(len(sizes)),
        coset_sizes=sorted(set(int(s) for s in sizes)),
    )


def check_rm_weight_class(code: Code, m: Optional[int] = None) -> PropertyVerdict:
    """ ``K_{n/2} union {0, 1} = RM(1, m)``. """
    if m is None:
        m = _length_parameter(code)
    n = code.n
    weights = code.weights()
    selected = code.subset((weights == n // 2) | (weights == 0) | (weights == n))
    rm = build_rm1(m)
    return PropertyVerdict(
        "rm-weight-class",
        selected == rm,
        EXHAUSTIVE,
        code.size,
        selected=selected.size,
        rm_size=rm.size,
    )


def _pair_sample(size: int, pairs: int, rng) -> tuple:
    x = rng.integers(0, size, size=pairs)
    y = rng.integers(0, size - 1, size=pairs)
    # y != x
    y = y + (y >= x)
    return x, y


def check_coset_distances(
    code: Code,
    m: Optional[int] = None,
    mode: str = EXHAUSTIVE,
    pairs: int = 10 ** 5,
    seed: int = 0,
) -> PropertyVerdict:
    """ Distances between words of different cosets are d or n - d, distances
    within a coset are n/2 or n. """
    if m is None:
        m = _length_parameter(code)
    n, d = kerdock_parameters(m)
    ids = coset_ids(code, m)
    inter_seen = set()
    intra_seen = set()
    checked = 0
    words = code.words
    if mode == EXHAUSTIVE:
        for offset, block in bitops.iter_distance_blocks(words):
            rows = np.arange(offset, offset + len(block))
            same = ids[rows][:, None] == ids[None, :]
            off_diagonal = rows[:, None] != np.arange(len(words))[None, :]
            inter_seen.update(int(v) for v in np.unique(block[~same]))
            intra_seen.update(
                int(v) for v in np.unique(block[same & off_diagonal])
            )
        checked = len(words) * (len(words) - 1)
    elif mode == SAMPLED:
        rng = np.random.default_rng(seed)
        x, y = _pair_sample(len(words), pairs, rng)
        dist = bitops.popcount(words[x] ^ words[y])
        same = ids[x] == ids[y]
        inter_seen.update(int(v) for v in np.unique(dist[~same]))
        intra_seen.update(int(v) for v in np.unique(dist[same]))
        checked = pairs
    else:
        raise ValueError("Unknown mode {!r}.".format(mode))
    holds = inter_seen <= {d, n - d} and intra_seen <= {n // 2, n}
    return PropertyVerdict(
        "coset-distances",
        holds,
        mode,
        checked,
        inter_coset=sorted(inter_seen),
        intra_coset=sorted(intra_seen),
        seed=seed if mode == SAMPLED else None,
    )


def check_rm_in_kernel(code: Code, m: Optional[int] = None) -> PropertyVerdict:
    """ Every word of RM(1, m) is in ``Ker(K)``. """
    if m is None:
        m = _length_parameter(code)
    rm = build_rm1(m)
    failing = [r for r in rm.words if not kernel_contains(code, r)]
    return PropertyVerdict(
        "rm-in-kernel",
        not failing,
        EXHAUSTIVE,
        rm.size,
        failing=len(failing),
    )


def check_half_distance_closure(
    code: Code,
    m: Optional[int] = None,
    mode: str = EXHAUSTIVE,
    pairs: int = 10 ** 5,
    seed: int = 0,
) -> PropertyVerdict:
    """ For ``x, y`` in K with ``d(x, y) = n/2`` also ``x + y`` is in K.

    In sampled mode, random words ``x`` are drawn and all their partners at
    distance n/2 are checked, until at least ``pairs`` pairs were looked at.
    """
    if m is None:
        m = _length_parameter(code)
    n = code.n
    words = code.words
    if mode == EXHAUSTIVE:
        rows = np.arange(len(words))
    elif mode == SAMPLED:
        rng = np.random.default_rng(seed)
        per_word = max(1, 2 * n - 2)
        draws = min(len(words), -(-pairs // per_word))
        rows = np.sort(rng.choice(len(words), size=draws, replace=False))
    else:
        raise ValueError("Unknown mode {!r}.".format(mode))
    checked = 0
    violations = 0
    for offset, block in bitops.iter_distance_blocks(words[rows], words):
        r, s = np.nonzero(block == n // 2)
        sums = words[rows[offset + r]] ^ words[s]
        violations += int((~code.contains_words(sums)).sum())
        checked += len(r)
    return PropertyVerdict(
        "half-distance-closure",
        violations == 0,
        mode,
        checked,
        violations=violations,
        seed=seed if mode == SAMPLED else None,
    )


def kerdock_self_check(code: Code, m: int, sample_pairs: int = 2000) -> None:
    """ Fast consistency check run by :func:`~kerdocklab.codes.build_kerdock`.

    Raises:
        ConstructionError: if any property fails
    """
    n, d = kerdock_parameters(m)
    allowed = {0, d, n // 2, n - d, n}
    weights = set(int(w) for w in np.unique(code.weights()))
    verdicts = [
        check_coset_union(code, m),
        check_rm_weight_class(code, m),
        check_coset_distances(code, m, mode=SAMPLED, pairs=sample_pairs),
    ]
    failed = [v for v in verdicts if not v]
    if not weights <= allowed:
        raise ConstructionError(
            "Kerdock code for m={} has weights {} outside of {}.".format(
                m, sorted(weights - allowed), sorted(allowed)
            )
        )
    if failed:
        raise ConstructionError(
            "Kerdock self check failed for m={}: {}".format(
                m, [v.to_dict() for v in failed]
            )
        )
    logger.debug("Kerdock self check passed for m={}.".format(m))
