#!/usr/bin/env python3

""" t-designs formed by the codewords of fixed weight, the block counting
identity for 1-designs, design strength predicted from the dual weights and
the MacWilliams transform. All arithmetic is exact. """

# std
import itertools
from typing import List, Optional

# 3rd party
import numpy as np
from scipy.special import comb
import sympy

# ours
from kerdocklab.codes import bitops
from kerdocklab.codes.code import Code, WeightDistribution
from kerdocklab.errors import (
    InconsistentSizeError,
    MixedWeightError,
    NotADesignError,
)
from kerdocklab.util.log import get_logger

logger = get_logger("design")

#: t-subsets are enumerated exhaustively up to this many subsets
MAX_ENUMERATED_SUBSETS = 10 ** 8
#: number of sampled t-subsets above that
DEFAULT_SAMPLED_SUBSETS = 10 ** 6
#: elements materialized per chunk
_CHUNK_ELEMENTS = 2 ** 24


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


class DesignReport(object):
    """ Design properties of a set of blocks (words of weight ``j``).

    Attributes:
        n: number of points (code length)
        block_weight: ``j``
        block_count: number of blocks
        strength: largest verified ``t`` (0 if not even a 1-design)
        lambdas: ``[lambda_1, ..., lambda_t]``
        max_t: largest level that was tested
        sampled: True if some level was checked on random t-subsets only
        nontrivial_weight_count: number of weights other than 0 and n of
            the code the blocks come from, if known
    """

    def __init__(
        self,
        n: int,
        block_weight: int,
        block_count: int,
        lambdas: List[int],
        max_t: int,
        sampled: bool = False,
        nontrivial_weight_count: Optional[int] = None,
    ):
        self.n = n
        self.block_weight = block_weight
        self.block_count = block_count
        self.lambdas = list(lambdas)
        self.max_t = max_t
        self.sampled = sampled
        self.nontrivial_weight_count = nontrivial_weight_count

    @property
    def strength(self) -> int:
        return len(self.lambdas)

    def lambda_(self, t: int) -> int:
        return self.lambdas[t - 1]

    def __repr__(self):
        return "DesignReport(n={}, j={}, blocks={}, t={}, lambdas={})".format(
            self.n,
            self.block_weight,
            self.block_count,
            self.strength,
            self.lambdas,
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "block_weight": self.block_weight,
            "block_count": self.block_count,
            "strength": self.strength,
            "lambdas": self.lambdas,
            "max_t": self.max_t,
            "sampled": self.sampled,
            "nontrivial_weight_count": self.nontrivial_weight_count,
        }


def _block_weight(blocks: Code) -> int:
    weights = np.unique(blocks.weights())
    if len(weights) != 1:
        raise MixedWeightError(
            "Blocks have weights {}.".format([int(w) for w in weights])
        )
    return int(weights[0])


def _supports(blocks: Code, j: int) -> np.ndarray:
    """ Sorted support of every block, shape ``(b, j)``. """
    return np.nonzero(blocks.bits())[1].reshape(blocks.size, j)


def subset_counts(blocks: Code, t: int) -> np.ndarray:
    """ Number of blocks containing each t-subset of coordinates, indexed by
    the colexicographic rank ``sum_l C(c_l, l)`` of ``c_1 < ... < c_t``.

    Returns:
        integer array of length ``C(n, t)``
    """
    n = blocks.n
    j = _block_weight(blocks)
    total = binom(n, t)
    counts = np.zeros(total, dtype=np.int64)
    if t > j:
        return counts
    table = np.array(
        [[binom(c, l) for l in range(t + 1)] for c in range(n)], dtype=np.int64
    )
    combos = np.array(list(itertools.combinations(range(j), t)), dtype=np.int64)
    supports = _supports(blocks, j)
    step = max(1, _CHUNK_ELEMENTS // max(1, len(combos) * t))
    for start in range(0, len(supports), step):
        chosen = supports[start : start + step][:, combos]
        ranks = np.zeros(chosen.shape[:2], dtype=np.int64)
        for l in range(t):
            ranks += table[chosen[..., l], l + 1]
        counts += np.bincount(ranks.ravel(), minlength=total)
    return counts


def sampled_subset_counts(
    blocks: Code, t: int, trials: int, seed: int
) -> np.ndarray:
    """ Number of blocks containing each of ``trials`` random t-subsets. """
    rng = np.random.default_rng(seed)
    bits = blocks.bits()
    out = np.empty(trials, dtype=np.int64)
    step = max(1, _CHUNK_ELEMENTS // max(1, blocks.size * t))
    for start in range(0, trials, step):
        stop = min(trials, start + step)
        subsets = np.argsort(rng.random((stop - start, blocks.n)), axis=1)[:, :t]
        contained = bits[:, subsets].all(axis=-1)
        out[start:stop] = contained.sum(axis=0)
    return out


def design_strength(
    blocks: Code,
    max_t: int,
    max_enumerated: int = MAX_ENUMERATED_SUBSETS,
    trials: int = DEFAULT_SAMPLED_SUBSETS,
    seed: int = 0,
    nontrivial_weight_count: Optional[int] = None,
) -> DesignReport:
    """ Largest ``t <= max_t`` such that every t-subset of coordinates lies
    in the same number of blocks.

    Args:
        blocks: words of one weight ``j``
        max_t: highest level to check, at most ``j``
        max_enumerated: levels with more t-subsets are sampled
        trials: number of sampled t-subsets
        seed: seed for sampling
        nontrivial_weight_count: number of weights other than 0 and n of
            the code the blocks are taken from, stored in the report

    Returns:
        :class:`DesignReport`
    """
    if blocks.size == 0:
        raise ValueError("No blocks given.")
    j = _block_weight(blocks)
    if not 1 <= max_t <= j:
        raise ValueError("max_t must be in [1, {}], got {}.".format(j, max_t))
    lambdas = []
    sampled = False
    for t in range(1, max_t + 1):
        if binom(blocks.n, t) <= max_enumerated:
            counts = subset_counts(blocks, t)
        else:
            counts = sampled_subset_counts(blocks, t, trials, seed + t)
            sampled = True
        if counts.min() != counts.max():
            break
        lambdas.append(int(counts[0]))
    report = DesignReport(
        n=blocks.n,
        block_weight=j,
        block_count=blocks.size,
        lambdas=lambdas,
        max_t=max_t,
        sampled=sampled,
        nontrivial_weight_count=nontrivial_weight_count,
    )
    logger.debug(repr(report))
    return report


def one_design_index(blocks: Code) -> int:
    """ ``lambda_1`` of a 1-design.

    Raises:
        NotADesignError: if the coordinates are not covered equally often
    """
    _block_weight(blocks)
    column_sums = blocks.bits().sum(axis=0)
    if column_sums.min() != column_sums.max():
        raise NotADesignError(
            "Blocks cover coordinates between {} and {} times.".format(
                int(column_sums.min()), int(column_sums.max())
            )
        )
    return int(column_sums[0])


class MagicIdentityResult(object):
    def __init__(self, holds, residual, weight, lambda1, distance_counts):
        self.holds = holds
        self.residual = residual
        self.weight = weight
        self.lambda1 = lambda1
        self.distance_counts = distance_counts

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "residual": self.residual,
            "weight": self.weight,
            "lambda1": self.lambda1,
            "distance_counts": {
                str(k): v for k, v in sorted(self.distance_counts.items())
            },
        }


def magic_identity(x, blocks: Code) -> MagicIdentityResult:
    """ Check ``sum_k delta^k (i + j - k) / 2 = i lambda_1`` where ``delta^k``
    is the number of blocks at distance ``k`` from ``x`` (weight ``i``).

    Args:
        x: word as integer or boolean vector
        blocks: 1-design of block weight ``j``

    Returns:
        :class:`MagicIdentityResult`, residual = left minus right hand side
    """
    lambda1 = one_design_index(blocks)
    j = _block_weight(blocks)
    if isinstance(x, (int, np.integer)):
        row = bitops.from_ints([int(x)], blocks.n)
    else:
        row = bitops.pack_bits(np.asarray(x, dtype=bool))
    i = int(bitops.popcount(row)[0])
    dist = bitops.popcount(blocks.words ^ row)
    values, counts = np.unique(dist, return_counts=True)
    delta = {int(k): int(c) for k, c in zip(values, counts)}
    doubled = sum(c * (i + j - k) for k, c in delta.items())
    residual = doubled // 2 - i * lambda1
    return MagicIdentityResult(
        holds=residual == 0,
        residual=residual,
        weight=i,
        lambda1=lambda1,
        distance_counts=delta,
    )


def assmus_mattson_strength(
    dual_wd: WeightDistribution, primal_d: int
) -> int:
    """ Design strength ``d - s`` guaranteed for the fixed weight classes of
    a code whose dual has minimum distance ``d``, with ``s`` the number of
    weights of the code other than 0 and n. """
    return primal_d - len(dual_wd.nontrivial_weights())


def krawtchouk(k: int, i: int, n: int) -> int:
    """ Binary Krawtchouk polynomial
    ``K_k(i; n) = sum_l (-1)^l C(i, l) C(n - i, k - l)``. """
    return sum(
        (-1) ** l * binom(i, l) * binom(n - i, k - l)
        for l in range(max(0, k - (n - i)), min(i, k) + 1)
    )


def _check_size(wd: WeightDistribution, size) -> sympy.Rational:
    total = wd.total
    if size is None:
        return total
    size = sympy.Rational(size)
    if total != size:
        raise InconsistentSizeError(
            "Weight distribution sums to {}, expected {}.".format(total, size)
        )
    return size


def macwilliams_transform(
    wd: WeightDistribution, n: Optional[int] = None, size=None
) -> WeightDistribution:
    """ ``W'_k = (1/|C|) sum_i A_i K_k(i; n)`` with exact rationals.

    Args:
        wd: weight distribution
        n: length (defaults to ``wd.n``)
        size: ``|C|``, checked against the sum of ``wd``

    Returns:
        rational valued :class:`WeightDistribution`
    """
    if n is None:
        n = wd.n
    size = _check_size(wd, size)
    out = {}
    for k in range(n + 1):
        value = sum(
            (c * krawtchouk(k, i, n) for i, c in wd._counts.items()),
            sympy.Integer(0),
        )
        out[k] = sympy.Rational(value) / size
    return WeightDistribution(out, n=n)


def macwilliams_polynomial(wd: WeightDistribution, size=None) -> WeightDistribution:
    """ The same transform via the weight enumerator,
    ``W(x + y, x - y) / |C|``. """
    size = _check_size(wd, size)
    x, y = sympy.symbols("x y")
    enumerator = wd.enumerator(x, y).as_expr()
    transformed = sympy.Poly(
        sympy.expand(enumerator.subs({x: x + y, y: x - y}, simultaneous=True)),
        x,
        y,
    )
    out = {
        k: transformed.coeff_monomial(x ** (wd.n - k) * y ** k) / size
        for k in range(wd.n + 1)
    }
    return WeightDistribution(out, n=wd.n)
