#!/usr/bin/env python3

""" Restriction of the Hamming scheme to a code.

For a code ``C`` and relations ``R_i = {(x, y) : d(x, y) = i}`` the
intersection number ``delta_{i,j}^k`` counts the ``z`` in ``C`` with
``(x, z) in R_j`` and ``(y, z) in R_k`` for a pair ``(x, y) in R_i``. The
restriction is an association scheme iff this count does not depend on the
pair.

Relations can optionally be labelled by word classes (e.g. "in C" and "in
1 + C" for the extension ``C union (1 + C)``): the label of a pair is then
``2 * distance + (class(x) xor class(y))``.
"""

# std
import math
from typing import Dict, Optional, Set, Tuple

# 3rd party
import numpy as np

# ours
from kerdocklab.codes import bitops
from kerdocklab.codes.code import Code
from kerdocklab.codes.families import build_kerdock, kerdock_parameters
from kerdocklab.codes.operators import shorten
from kerdocklab.errors import (
    ExtensionPreconditionError,
    NonIntegralError,
    SizeCapError,
    UnsupportedParameterError,
)
from kerdocklab.result import AbstractResult
from kerdocklab.util.log import get_logger
from kerdocklab.worker import CodeWorker

logger = get_logger("scheme")

FULL = "full"
SAMPLED = "sampled"

#: Largest code handled in full mode
MAX_FULL_SIZE = 4096

#: Number of histogram cells materialized at once in sampled mode
_SAMPLED_BLOCK_ELEMENTS = 2 ** 22

Triple = Tuple[int, int, int]


def relation_label(distance: int, crossed: bool) -> int:
    """ Label of a relation in a class labelled tensor. """
    return 2 * distance + int(crossed)


def split_label(label: int) -> Tuple[int, bool]:
    """ Inverse of :func:`relation_label`. """
    return label // 2, bool(label % 2)


class IntersectionTensor(AbstractResult):
    """ Intersection numbers of the restriction of the Hamming scheme to a
    code, as returned by :class:`SchemeChecker`.

    Attributes:
        n: length of the code
        relations: sorted relation labels (distances, or labels as in
            :func:`relation_label` if ``labelled``)
        delta: ``{(i, j, k): count}``, zero entries omitted. If the tensor
            is inconsistent, the counts of the first pair seen per ``i``.
        consistent: every count is independent of the pair
        witness: description of the first inconsistency or None
        mode: ``"full"`` or ``"sampled"``
        seed, trials: sampling parameters (sampled mode)
        checked_pairs: number of ordered pairs looked at
        labelled: relations carry a crossing bit
        md: settings and provenance of the worker
    """

    def __init__(
        self,
        n: int,
        relations,
        delta: Dict[Triple, int],
        consistent: bool,
        witness: Optional[dict],
        mode: str,
        checked_pairs: int,
        labelled: bool = False,
        seed: Optional[int] = None,
        trials: Optional[int] = None,
        md=None,
    ):
        super().__init__()
        self.n = n
        self.relations = sorted(int(r) for r in relations)
        self.delta = dict(delta)
        self.consistent = consistent
        self.witness = witness
        self.mode = mode
        self.checked_pairs = checked_pairs
        self.labelled = labelled
        self.seed = seed
        self.trials = trials
        self.md = md

    def __getitem__(self, key: Triple) -> int:
        return self.delta.get(tuple(key), 0)

    def __bool__(self):
        return self.consistent

    def __repr__(self):
        return "IntersectionTensor(n={}, relations={}, consistent={}, mode={})".format(
            self.n, self.relations, self.consistent, self.mode
        )

    def entry(self, i, j, k) -> int:
        """ Intersection number for relations given as distances, or as
        ``(distance, crossed)`` tuples for labelled tensors. """

        def label(r):
            if self.labelled:
                return relation_label(*r)
            return r

        return self[label(i), label(j), label(k)]

    def distance_set(self) -> Set[int]:
        if self.labelled:
            return {split_label(r)[0] for r in self.relations}
        return set(self.relations)

    def row_sums(self) -> Dict[Tuple[int, int], int]:
        """ ``{(i, j): sum_k delta_{i,j}^k}`` """
        sums = {}
        for (i, j, k), count in self.delta.items():
            sums[(i, j)] = sums.get((i, j), 0) + count
        return sums

    def row_sum_property(self) -> bool:
        """ ``sum_k delta_{i,j}^k`` is the same for all ``i`` and equals the
        valency ``delta_{0,j}^j``. """
        sums = self.row_sums()
        for j in self.relations:
            valency = self[0, j, j]
            for i in self.relations:
                if sums.get((i, j), 0) != valency:
                    return False
        return True

    def is_symmetric(self) -> bool:
        """ ``delta_{i,j}^k = delta_{i,k}^j`` """
        return all(
            self[(i, k, j)] == count for (i, j, k), count in self.delta.items()
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "relations": self.relations,
            "labelled": self.labelled,
            "consistent": self.consistent,
            "witness": self.witness,
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "checked_pairs": self.checked_pairs,
            "delta": {
                "{},{},{}".format(*key): count
                for key, count in sorted(self.delta.items())
            },
        }


class SchemeChecker(CodeWorker):
    """ Checks whether the restriction of the Hamming scheme to a code is an
    association scheme and computes its intersection numbers.

    Usage example:

    .. code-block:: python

        import kerdocklab as kl

        s = kl.analysis.SchemeChecker()
        s.set_mode("sampled", seed=1, trials=10**5)
        tensor = s.run(code)
        tensor.consistent
    """

    def __init__(self):
        super().__init__()
        self.set_mode(FULL)
        self.set_classes(None)
        self.set_max_full_size(MAX_FULL_SIZE)

    # **************************************************************************
    # Settings
    # **************************************************************************

    def set_mode(
        self, mode: str, seed: Optional[int] = None, trials: int = 10 ** 5
    ) -> None:
        """ Set the enumeration mode.

        Args:
            mode: ``"full"`` (all ordered pairs and all third words) or
                ``"sampled"`` (random pairs, all third words)
            seed: random seed, required in sampled mode
            trials: number of sampled pairs
        """
        if mode not in (FULL, SAMPLED):
            raise ValueError("Unknown mode {!r}.".format(mode))
        if mode == SAMPLED and seed is None:
            raise ValueError("Sampled mode requires a seed.")
        if mode == SAMPLED and trials < 1:
            raise ValueError("Need at least one sampled pair.")
        self.md["mode"] = mode
        self.md["seed"] = seed
        self.md["trials"] = trials if mode == SAMPLED else None

    def set_classes(self, classes: Optional[np.ndarray]) -> None:
        """ Label every codeword with a class (0 or 1, in row order of the
        code). Relations then distinguish pairs within and across classes.
        """
        self._classes = None if classes is None else np.asarray(classes) % 2
        self.md["labelled"] = classes is not None

    def set_max_full_size(self, size: int) -> None:
        self.md["max_full_size"] = size

    # **************************************************************************
    # Run
    # **************************************************************************

    def run(self, code: Code) -> IntersectionTensor:
        self._stamp()
        if self._classes is not None and len(self._classes) != code.size:
            raise ValueError(
                "Got {} classes for {} codewords.".format(
                    len(self._classes), code.size
                )
            )
        if self.md["mode"] == FULL:
            if code.size > self.md["max_full_size"]:
                raise SizeCapError(
                    "Full scheme check of {} > {} codewords; use sampled "
                    "mode.".format(code.size, self.md["max_full_size"])
                )
            tensor = self._run_full(code)
        else:
            tensor = self._run_sampled(code)
        if tensor.consistent:
            self.log.debug("Restriction to {} is an association scheme.".format(code))
        else:
            self.log.info(
                "Restriction to {} is not an association scheme: {}".format(
                    code, tensor.witness
                )
            )
        return tensor

    def _relations_to(self, code: Code, rows: np.ndarray) -> np.ndarray:
        """ Relation labels between the given rows and all codewords. """
        rel = bitops.distances(code.words[rows], code.words)
        if self._classes is not None:
            crossed = self._classes[rows][:, None] ^ self._classes[None, :]
            rel = 2 * rel + crossed
        return rel

    def _run_full(self, code: Code) -> IntersectionTensor:
        size = code.size
        rel = np.empty((size, size), dtype=np.int64)
        step = bitops.block_size(size, code.words.shape[1])
        for start in range(0, size, step):
            rows = np.arange(start, min(size, start + step))
            rel[rows] = self._relations_to(code, rows)
        labels, inv = np.unique(rel, return_inverse=True)
        inv = inv.reshape(size, size)
        # indicator matrices, counts stay exact in float32
        indicators = [(inv == a).astype(np.float32) for a in range(len(labels))]
        pairs = [np.nonzero(inv == a) for a in range(len(labels))]

        delta = {}
        inconsistencies = []
        for j in range(len(labels)):
            for k in range(j, len(labels)):
                product = np.rint(indicators[j] @ indicators[k].T).astype(
                    np.int64
                )
                for jj, kk, counts in (
                    (j, k, product),
                    (k, j, product.T),
                ):
                    for i, (xs, ys) in enumerate(pairs):
                        values = counts[xs, ys]
                        key = (int(labels[i]), int(labels[jj]), int(labels[kk]))
                        if values[0]:
                            delta[key] = int(values[0])
                        bad = np.nonzero(values != values[0])[0]
                        if len(bad):
                            b = bad[0]
                            inconsistencies.append(
                                (
                                    key,
                                    {
                                        "relation": key[0],
                                        "cell": [key[1], key[2]],
                                        "pairs": [
                                            [int(xs[0]), int(ys[0])],
                                            [int(xs[b]), int(ys[b])],
                                        ],
                                        "counts": [
                                            int(values[0]),
                                            int(values[b]),
                                        ],
                                    },
                                )
                            )
                    if j == k:
                        break
        witness = min(inconsistencies, key=lambda t: t[0])[1] if inconsistencies else None
        return IntersectionTensor(
            n=code.n,
            relations=labels,
            delta=delta,
            consistent=witness is None,
            witness=witness,
            mode=FULL,
            checked_pairs=size * size,
            labelled=self._classes is not None,
            md=self.md,
        )

    def _run_sampled(self, code: Code) -> IntersectionTensor:
        size = code.size
        if size < 2:
            raise ValueError("Sampling pairs needs at least two codewords.")
        seed = self.md["seed"]
        trials = self.md["trials"]
        rng = np.random.default_rng(seed)
        xs = rng.integers(0, size, size=trials)
        ys = rng.integers(0, size - 1, size=trials)
        ys = ys + (ys >= xs)

        cells = 2 * code.n + 2 if self._classes is not None else code.n + 1
        batch = max(1, _SAMPLED_BLOCK_ELEMENTS // max(size, cells * cells))
        references = {}  # type: Dict[int, Tuple[int, np.ndarray]]
        witness = None
        for start in range(0, trials, batch):
            bx = xs[start : start + batch]
            by = ys[start : start + batch]
            rx = self._relations_to(code, bx)
            ry = self._relations_to(code, by)
            keys = rx * cells + ry
            keys += np.arange(len(bx))[:, None] * (cells * cells)
            counts = np.bincount(
                keys.ravel(), minlength=len(bx) * cells * cells
            ).reshape(len(bx), cells * cells)
            pair_rel = rx[np.arange(len(bx)), by]
            for i in np.unique(pair_rel):
                sel = np.nonzero(pair_rel == i)[0]
                if int(i) not in references:
                    references[int(i)] = (start + int(sel[0]), counts[sel[0]])
                first, ref = references[int(i)]
                bad = np.nonzero(np.any(counts[sel] != ref[None, :], axis=1))[0]
                if len(bad) and witness is None:
                    b = sel[bad[0]]
                    cell = int(np.nonzero(counts[b] != ref)[0][0])
                    j, k = divmod(cell, cells)
                    witness = {
                        "relation": int(i),
                        "cell": [j, k],
                        "pairs": [
                            [int(xs[first]), int(ys[first])],
                            [int(bx[b]), int(by[b])],
                        ],
                        "counts": [int(ref[cell]), int(counts[b, cell])],
                    }
        delta = {}
        relations = set(references)
        for i, (_, ref) in references.items():
            for cell in np.nonzero(ref)[0]:
                j, k = divmod(int(cell), cells)
                delta[(i, j, k)] = int(ref[cell])
                relations.update((j, k))
        return IntersectionTensor(
            n=code.n,
            relations=relations,
            delta=delta,
            consistent=witness is None,
            witness=witness,
            mode=SAMPLED,
            checked_pairs=trials,
            labelled=self._classes is not None,
            seed=seed,
            trials=trials,
            md=self.md,
        )


def restriction_scheme_check(
    code: Code,
    mode: str = FULL,
    seed: Optional[int] = None,
    trials: int = 10 ** 5,
    classes: Optional[np.ndarray] = None,
) -> IntersectionTensor:
    """ Shortcut for configuring and running a :class:`SchemeChecker`. """
    checker = SchemeChecker()
    checker.set_mode(mode, seed=seed, trials=trials)
    checker.set_classes(classes)
    return checker.run(code)


# ******************************************************************************
# Kerdock specific
# ******************************************************************************


def predicted_kerdock_deltas(n: int, d: int) -> Tuple[int, int]:
    """ Closed forms

    ``delta_a = (n^2 - 6n - 2nd + 8d) / (4(n - 2d))`` and
    ``delta_b = (n^2 - 2nd + 2n) / (4(n - 2d))``

    for the intersection numbers ``delta_{n-d,n/2}^{n-d}`` and
    ``delta_{n-d,n/2}^{d}`` of the doubly shortened Kerdock code.

    Raises:
        UnsupportedParameterError: if ``n`` is not an even power of two or
            ``d`` is not the Kerdock minimum distance
        NonIntegralError: if a quotient is not an integer
    """
    m = int(round(math.log2(n))) if n > 0 else -1
    if m < 4 or 2 ** m != n or m % 2:
        raise UnsupportedParameterError(
            "n={} is not an even power of two.".format(n)
        )
    if 2 * d != n - math.isqrt(n):
        raise UnsupportedParameterError(
            "d={} is not the minimum distance {} of the Kerdock code of "
            "length {}.".format(d, (n - math.isqrt(n)) // 2, n)
        )
    denominator = 4 * (n - 2 * d)
    numerators = (n * n - 6 * n - 2 * n * d + 8 * d, n * n - 2 * n * d + 2 * n)
    for numerator in numerators:
        if numerator % denominator:
            raise NonIntegralError(
                "{}/{} is not an integer.".format(numerator, denominator)
            )
    delta_a, delta_b = (numerator // denominator for numerator in numerators)
    return delta_a, delta_b


def doubly_shortened_kerdock(m: int, kerdock: Optional[Code] = None) -> Code:
    """ Kerdock code of length ``2^m`` (built unless given) shortened in
    its last two coordinates. """
    n, _ = kerdock_parameters(m)
    if kerdock is None:
        kerdock = build_kerdock(m)
    return shorten(shorten(kerdock, n - 1), n - 2)


def kerdock_base_deltas(tensor: IntersectionTensor, n: int, d: int):
    """ ``(delta_{n-d,n/2}^{n-d}, delta_{n-d,n/2}^{d})`` read from the
    tensor of the doubly shortened Kerdock code of unshortened length
    ``n``. """
    return (
        tensor.entry(n - d, n // 2, n - d),
        tensor.entry(n - d, n // 2, d),
    )


def kerdock_extension_deltas(tensor: IntersectionTensor, n: int, d: int):
    """ ``(delta_{d-2,n/2}^{d-2}, delta_{d-2,n/2}^{n-d-2})`` read from the
    tensor of ``K'' union (1 + K'')``. In a labelled tensor the first and
    the last relation cross the two halves. """
    if tensor.labelled:
        return (
            tensor.entry((d - 2, True), (n // 2, False), (d - 2, True)),
            tensor.entry((d - 2, True), (n // 2, False), (n - d - 2, True)),
        )
    return (
        tensor.entry(d - 2, n // 2, d - 2),
        tensor.entry(d - 2, n // 2, n - d - 2),
    )


# ******************************************************************************
# Extension by the all-one word
# ******************************************************************************


def expected_extension_tensor(
    tensor_base: IntersectionTensor, n_ext: int, labelled: bool
) -> Dict[Triple, int]:
    """ Intersection numbers of ``C union (1 + C)`` predicted from those of
    ``C``: with ``i' = n - i`` and an even number of primed relations,
    ``delta_{i',j'}^k = delta_{i',j}^{k'} = delta_{i,j'}^{k'} =
    delta_{i,j}^k = delta_{i,j}^k(C)``; all other numbers vanish. """

    def label(distance, crossed):
        if crossed:
            distance = n_ext - distance
        if labelled:
            return relation_label(distance, crossed)
        return distance

    patterns = [
        (False, False, False),
        (True, True, False),
        (True, False, True),
        (False, True, True),
    ]
    expected = {}
    for (i, j, k), count in tensor_base.delta.items():
        for ci, cj, ck in patterns:
            expected[(label(i, ci), label(j, cj), label(k, ck))] = count
    return expected


def extension_relation_check(
    tensor_base: IntersectionTensor, tensor_ext: IntersectionTensor
) -> bool:
    """ Compare the tensor of ``C`` with that of ``C union (1 + C)``.

    Plain (unlabelled) extension tensors need
    ``I(C) cap {n - i : i in I(C)} = {}``, otherwise the distances of the
    extension don't tell the two halves apart.

    Raises:
        ExtensionPreconditionError: if the precondition is violated for a
            plain tensor, or the base tensor is labelled
    """
    if tensor_base.labelled:
        raise ExtensionPreconditionError("Base tensor must not be labelled.")
    n = tensor_ext.n
    base = tensor_base.distance_set()
    overlap = base & {n - i for i in base}
    if not tensor_ext.labelled and overlap:
        raise ExtensionPreconditionError(
            "Distance set {} meets its mirror in {}.".format(
                sorted(base), sorted(overlap)
            )
        )
    if not (tensor_base.consistent and tensor_ext.consistent):
        logger.warning("Extension check on an inconsistent tensor.")
        return False
    expected = expected_extension_tensor(
        tensor_base, n, labelled=tensor_ext.labelled
    )
    if expected == tensor_ext.delta:
        return True
    differing = sorted(
        key
        for key in set(expected) | set(tensor_ext.delta)
        if expected.get(key, 0) != tensor_ext.delta.get(key, 0)
    )
    logger.warning(
        "{} intersection numbers of the extension differ, first: {}.".format(
            len(differing), differing[:5]
        )
    )
    return False
