#!/usr/bin/env python3

""" i-components of binary codes.

The graph ``G_i(C)`` has the codewords as vertices and an edge between ``x``
and ``y`` iff ``d(x, y) = d`` (the minimum distance of ``C``) and
``x_i != y_i``. Its connected components are the i-components of ``C``.

Two methods are available:

* ``graph``: union-find over all edges of ``G_i(C)``,
* ``span``: for linear codes the component of 0 is the span of
  ``V_i = {v in C : w(v) = d, v_i = 1}``, so there are
  ``2^(dim C - rank V_i)`` components of equal size.
"""

# std
import collections
from typing import Iterable, List, Optional, Tuple, Union

# 3rd party
import numpy as np
import pandas as pd
import scipy.sparse
import scipy.sparse.csgraph

# ours
from kerdocklab.algebra.gf2 import gf2_rank
from kerdocklab.analysis.structure import EXHAUSTIVE, PropertyVerdict
from kerdocklab.codes import bitops
from kerdocklab.codes.code import Code, MAX_PAIRWISE_SIZE
from kerdocklab.codes.families import ParityCheckCode, build_rm1
from kerdocklab.codes.operators import puncture
from kerdocklab.errors import (
    ComponentCountError,
    EmptyFlipSetError,
    PatternNotFoundError,
    SizeCapError,
)
from kerdocklab.result import AbstractResult
from kerdocklab.util.log import get_logger
from kerdocklab.worker import CodeWorker

logger = get_logger("components")

GRAPH = "graph"
SPAN = "span"

Edges = Tuple[np.ndarray, np.ndarray]


# ******************************************************************************
# Union-find
# ******************************************************************************


class DisjointSet(object):
    """ Disjoint-set forest over the elements ``0, ..., size - 1``.

    Single unions use union by size and path compression. Large edge lists
    are merged with :meth:`union_edges`, which hooks roots onto smaller
    roots for all edges at once and compresses the whole forest between
    rounds.
    """

    def __init__(self, size: int):
        self._parent = np.arange(size, dtype=np.int64)
        self._size = np.ones(size, dtype=np.int64)

    def __len__(self):
        return len(self._parent)

    def find(self, a: int) -> int:
        root = a
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[a] != root:
            self._parent[a], a = root, self._parent[a]
        return int(root)

    def union(self, a: int, b: int) -> bool:
        """ Merge the sets of ``a`` and ``b``. Returns False if they were
        already merged. """
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self._size[root_a] < self._size[root_b]:
            root_a, root_b = root_b, root_a
        self._parent[root_b] = root_a
        self._size[root_a] += self._size[root_b]
        return True

    def _compress(self) -> None:
        while True:
            grand = self._parent[self._parent]
            if np.array_equal(grand, self._parent):
                return
            self._parent = grand

    def union_edges(self, a: np.ndarray, b: np.ndarray) -> None:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        while len(a):
            self._compress()
            ra = self._parent[a]
            rb = self._parent[b]
            open_ = ra != rb
            if not open_.any():
                break
            a, b, ra, rb = a[open_], b[open_], ra[open_], rb[open_]
            np.minimum.at(self._parent, np.maximum(ra, rb), np.minimum(ra, rb))
        self._compress()
        self._size = np.bincount(self._parent, minlength=len(self._parent))

    def roots(self) -> np.ndarray:
        """ Representative of every element. """
        self._compress()
        return self._parent.copy()

    @property
    def count(self) -> int:
        return len(np.unique(self.roots()))

    def component_sizes(self) -> List[int]:
        """ Sizes of the sets, largest first. """
        counts = np.bincount(self.roots(), minlength=len(self))
        return sorted((int(c) for c in counts if c), reverse=True)


# ******************************************************************************
# Reports
# ******************************************************************************


class ComponentReport(AbstractResult):
    """ i-components of a code for one coordinate.

    Attributes:
        coordinate: ``i``
        d_used: minimum distance defining the edges
        component_count: number of components
        component_sizes: sizes, largest first
        method: ``"graph"`` or ``"span"``
        labels: component representative of every codeword (graph method)
        rank: rank of ``V_i`` (span method)
        dimension: dimension of the code (span method)
        assumed_distance: ``d_used`` is the designed distance, not verified
        classification_verdict: outcome of a parity classification, if run
    """

    def __init__(
        self,
        coordinate: int,
        d_used: Optional[int],
        component_sizes: List[int],
        method: str,
        labels: Optional[np.ndarray] = None,
        rank: Optional[int] = None,
        dimension: Optional[int] = None,
        assumed_distance: bool = False,
        classification_verdict: Optional[bool] = None,
    ):
        super().__init__()
        self.coordinate = coordinate
        self.d_used = d_used
        self.component_sizes = list(component_sizes)
        self.method = method
        self.labels = labels
        self.rank = rank
        self.dimension = dimension
        self.assumed_distance = assumed_distance
        self.classification_verdict = classification_verdict

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    def __repr__(self):
        return "ComponentReport(i={}, d={}, count={}, method={})".format(
            self.coordinate, self.d_used, self.component_count, self.method
        )

    def to_dict(self) -> dict:
        out = {
            "coordinate": self.coordinate,
            "d_used": self.d_used,
            "component_count": self.component_count,
            "component_sizes": self.component_sizes,
            "method": self.method,
        }
        if self.method == SPAN:
            out["rank"] = self.rank
            out["dimension"] = self.dimension
            out["assumed_distance"] = self.assumed_distance
        if self.classification_verdict is not None:
            out["classification_verdict"] = self.classification_verdict
        return out


class ComponentSweep(AbstractResult):
    """ Component reports of one code for several coordinates. """

    def __init__(self, reports: List[ComponentReport], code_info: dict, md):
        super().__init__()
        self.reports = reports
        self.code_info = code_info
        self.md = md

    @property
    def df(self) -> pd.DataFrame:
        return pd.DataFrame(
            [report.to_dict() for report in self.reports]
        ).set_index("coordinate")

    @property
    def counts(self) -> List[int]:
        return [r.component_count for r in self.reports]

    def to_dict(self) -> dict:
        return {
            "code": self.code_info,
            "components": [report.to_dict() for report in self.reports],
        }


# ******************************************************************************
# Graph method
# ******************************************************************************


def min_distance_edges(code: Code, d: Optional[int] = None) -> Edges:
    """ All pairs ``r < s`` of rows at distance ``d`` (default: minimum
    distance). """
    if code.size > MAX_PAIRWISE_SIZE:
        raise SizeCapError(
            "Edge enumeration for {} > {} codewords; use the span method for "
            "linear codes.".format(code.size, MAX_PAIRWISE_SIZE)
        )
    if d is None:
        d = code.min_distance
    us = []
    vs = []
    for offset, block in bitops.iter_distance_blocks(code.words):
        r, s = np.nonzero(block == d)
        r = r + offset
        keep = s > r
        us.append(r[keep])
        vs.append(s[keep])
    if not us:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(us), np.concatenate(vs)


def flip_edges(code: Code, edges: Edges, i: int) -> Edges:
    """ The edges whose end points differ in coordinate ``i``. """
    column = code.column(i)
    u, v = edges
    keep = column[u] != column[v]
    return u[keep], v[keep]


def i_components(
    code: Code, i: int, edges: Optional[Edges] = None
) -> ComponentReport:
    """ Components of ``G_i(C)`` by union-find.

    Args:
        code: Code with at most ``MAX_PAIRWISE_SIZE`` words
        i: coordinate
        edges: precomputed :func:`min_distance_edges`

    Returns:
        :class:`ComponentReport` with ``labels``
    """
    if not 0 <= i < code.n:
        raise IndexError("Coordinate {} out of range.".format(i))
    if code.size < 2:
        return ComponentReport(
            i, None, [1] * code.size, GRAPH, labels=np.arange(code.size)
        )
    d = code.min_distance
    if edges is None:
        edges = min_distance_edges(code, d)
    forest = DisjointSet(code.size)
    forest.union_edges(*flip_edges(code, edges, i))
    return ComponentReport(
        i,
        d,
        forest.component_sizes(),
        GRAPH,
        labels=forest.roots(),
    )


def bfs_component_count(code: Code, i: int) -> int:
    """ Number of i-components by breadth first search over an explicit
    adjacency list. Only for small codes. """
    if code.size < 2:
        return code.size
    d = code.min_distance
    dist = bitops.distances(code.words, code.words)
    column = code.column(i)
    adjacency = [
        np.nonzero((dist[r] == d) & (column != column[r]))[0]
        for r in range(code.size)
    ]
    seen = np.zeros(code.size, dtype=bool)
    count = 0
    for start in range(code.size):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = collections.deque([start])
        while queue:
            r = queue.popleft()
            for s in adjacency[r]:
                if not seen[s]:
                    seen[s] = True
                    queue.append(s)
    return count


def csgraph_component_count(
    code: Code, i: int, edges: Optional[Edges] = None
) -> int:
    """ Number of i-components via :mod:`scipy.sparse.csgraph`. """
    if code.size < 2:
        return code.size
    if edges is None:
        edges = min_distance_edges(code)
    u, v = flip_edges(code, edges, i)
    graph = scipy.sparse.coo_matrix(
        (np.ones(len(u), dtype=np.int8), (u, v)), shape=(code.size, code.size)
    )
    count, _ = scipy.sparse.csgraph.connected_components(graph, directed=False)
    return int(count)


# ******************************************************************************
# Span method
# ******************************************************************************


def _dimension(code: Code) -> int:
    k = code.size.bit_length() - 1
    if not code.linear or 2 ** k != code.size:
        raise ValueError("{} is not a linear code.".format(code))
    return k


def min_weight_supports(
    code: ParityCheckCode, i: int, w: int
) -> List[int]:
    """ All words of weight ``w = 5`` through coordinate ``i`` of a code
    given by its parity checks.

    Supports ``{i, a, b, c, e}`` are found by matching the pair syndromes
    ``s(a) + s(b)`` and ``s(i) + s(c) + s(e)``.
    """
    if w != 5:
        raise ValueError("Syndrome search is implemented for weight 5 only.")
    columns = code.columns
    others = np.array([j for j in range(code.n) if j != i], dtype=np.int64)
    first, second = np.triu_indices(len(others), 1)
    a = others[first]
    b = others[second]
    syndromes = columns[a] ^ columns[b]
    order = np.argsort(syndromes, kind="stable")
    ordered = syndromes[order]
    targets = syndromes ^ columns[i]
    lo = np.searchsorted(ordered, targets, side="left")
    hi = np.searchsorted(ordered, targets, side="right")
    matches = hi - lo
    total = int(matches.sum())
    if total == 0:
        return []
    p = np.repeat(np.arange(len(syndromes)), matches)
    starts = np.repeat(lo, matches)
    steps = np.arange(total) - np.repeat(np.cumsum(matches) - matches, matches)
    q = order[starts + steps]
    keep = (
        (p < q)
        & (a[p] != a[q])
        & (a[p] != b[q])
        & (b[p] != a[q])
        & (b[p] != b[q])
    )
    quads = np.sort(
        np.stack([a[p[keep]], b[p[keep]], a[q[keep]], b[q[keep]]], axis=1),
        axis=1,
    )
    quads = np.unique(quads, axis=0)
    return [
        (1 << i) | sum(1 << int(c) for c in quad) for quad in quads
    ]


def flip_set(code: Code, i: int, w: int) -> List[int]:
    """ ``V_i``: codewords of weight ``w`` with a one at ``i``, as
    integers. """
    mask = (code.weights() == w) & code.column(i)
    return bitops.to_ints(code.words[mask])


def linear_span_components(
    code: Union[Code, ParityCheckCode], i: int, w: Optional[int] = None
) -> ComponentReport:
    """ i-components of a linear code from the rank of ``V_i``.

    Args:
        code: enumerated linear :class:`~kerdocklab.codes.Code` or
            :class:`~kerdocklab.codes.ParityCheckCode`
        i: coordinate
        w: minimum distance. Defaults to the exact minimum distance of an
            enumerated code and to the designed distance of a parity check
            description (flagged as assumed).

    Raises:
        EmptyFlipSetError: if ``V_i`` is empty
    """
    if not 0 <= i < code.n:
        raise IndexError("Coordinate {} out of range.".format(i))
    assumed = False
    if isinstance(code, ParityCheckCode):
        k = code.dimension
        if w is None:
            w = code.designed_distance
            assumed = True
        vectors = min_weight_supports(code, i, w)
    else:
        k = _dimension(code)
        if w is None:
            w = code.min_distance
        vectors = flip_set(code, i, w)
    if not vectors:
        raise EmptyFlipSetError(
            "No codeword of weight {} has a one at coordinate {}.".format(w, i)
        )
    rank = gf2_rank(vectors, stop_at=k)
    count = 2 ** (k - rank)
    return ComponentReport(
        i,
        w,
        [2 ** rank] * count,
        SPAN,
        rank=rank,
        dimension=k,
        assumed_distance=assumed,
    )


def min_weight_span_rank(code: Code) -> int:
    """ Rank of the set of minimum weight codewords. """
    d = code.min_distance
    return gf2_rank(bitops.to_ints(code.words[code.weights() == d]))


# ******************************************************************************
# Worker
# ******************************************************************************


class ComponentAnalyzer(CodeWorker):
    """ Computes i-components for a selection of coordinates.

    Usage example:

    .. code-block:: python

        import kerdocklab as kl

        a = kl.analysis.ComponentAnalyzer()
        a.set_method("graph")
        a.set_coordinates([0, 1, 2])
        r = a.run(code)
        r.df
    """

    def __init__(self):
        super().__init__()
        self.set_method(GRAPH)
        self.set_coordinates(None)
        self._progress_bar = False

    def set_method(self, method: str) -> None:
        """ ``"graph"`` or ``"span"`` (linear codes only). """
        if method not in (GRAPH, SPAN):
            raise ValueError("Unknown method {!r}.".format(method))
        self.md["method"] = method

    def set_coordinates(self, coordinates: Optional[Iterable[int]]) -> None:
        """ Coordinates to analyze, None for all. """
        self.md["coordinates"] = (
            None if coordinates is None else [int(i) for i in coordinates]
        )

    def run(self, code) -> ComponentSweep:
        self._stamp()
        coordinates = self.md["coordinates"]
        if coordinates is None:
            coordinates = list(range(code.n))
        method = self.md["method"]
        reports = []
        if method == GRAPH:
            if isinstance(code, ParityCheckCode):
                raise ValueError("Graph method needs an enumerated code.")
            edges = min_distance_edges(code) if code.size >= 2 else None
            for i in coordinates:
                reports.append(i_components(code, i, edges=edges))
        else:
            for i in coordinates:
                reports.append(linear_span_components(code, i))
        self.log.debug(
            "Component counts of {}: {}.".format(
                code, [r.component_count for r in reports]
            )
        )
        return ComponentSweep(reports, code.describe(), self.md)


# ******************************************************************************
# Kerdock and BCH specific checks
# ******************************************************************************


def _parity_matches(code: Code, report: ComponentReport, i: int) -> bool:
    """ Components coincide with the classes of ``w(x) - x_i mod 2``. """
    parity = (code.weights() - code.column(i)) % 2
    labels = report.labels
    for root in np.unique(labels):
        if len(np.unique(parity[labels == root])) != 1:
            return False
    # both classes are present and separated
    return len(np.unique(parity)) == report.component_count


def parity_classification_sweep(
    kerdock: Code, p: int, coordinates: Optional[Iterable[int]] = None
) -> List[ComponentReport]:
    """ i-components of the Kerdock code punctured at ``p``; each report
    carries the verdict whether its two components are the words whose
    puncturing at ``i`` has even resp. odd weight.

    Raises:
        ComponentCountError: if a coordinate does not give two components
    """
    punctured = puncture(kerdock, p)
    if coordinates is None:
        coordinates = range(punctured.n)
    edges = min_distance_edges(punctured)
    reports = []
    for i in coordinates:
        report = i_components(punctured, i, edges=edges)
        if report.component_count != 2:
            raise ComponentCountError(
                "Kerdock code punctured at {} has {} components for "
                "coordinate {}.".format(p, report.component_count, i)
            )
        report.classification_verdict = _parity_matches(punctured, report, i)
        reports.append(report)
    return reports


def parity_classification_check(kerdock: Code, p: int, i: int) -> bool:
    """ The two i-components of the Kerdock code punctured at ``p`` are
    the words whose puncturing at ``i`` has even resp. odd weight. """
    return parity_classification_sweep(kerdock, p, [i])[0].classification_verdict


class SwitchingResult(object):
    """ Outcome of :func:`switching_check`. """

    def __init__(self, p, q, translate_holds, equals_transposed, parameters):
        self.p = p
        self.q = q
        #: the "odd" half is a translate of the "even" half
        self.translate_holds = translate_holds
        #: the switched code is the code with coordinates p, q exchanged
        self.equals_transposed = equals_transposed
        #: (length, size, minimum distance) of the original and switched code
        self.parameters = parameters

    @property
    def holds(self) -> bool:
        return (
            self.translate_holds
            and self.equals_transposed
            and self.parameters[0] == self.parameters[1]
        )

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "holds": self.holds,
            "translate_holds": self.translate_holds,
            "equals_transposed": self.equals_transposed,
            "parameters": [list(p) for p in self.parameters],
        }


def switching_check(kerdock: Code, p: int, q: int) -> SwitchingResult:
    """ Switch the half ``K^01 union K^10`` of the Kerdock code (bits at
    ``(p, q)``) from the translate ``x + (K^00 union K^11)`` to
    ``y + (K^00 union K^11)``, where ``x`` in RM(1, m) has bits ``01`` at
    ``(p, q)`` and ``y`` is ``x`` with these bits exchanged. The switched
    code must be the original one with coordinates ``p`` and ``q``
    transposed.

    Raises:
        PatternNotFoundError: if RM(1, m) has no word with bits 01 at (p, q)
    """
    if p == q:
        raise ValueError("Need two different coordinates.")
    n = kerdock.n
    m = n.bit_length() - 1
    for c in (p, q):
        if not 0 <= c < n:
            raise IndexError("Coordinate {} out of range.".format(c))
    rm = build_rm1(m)
    pattern = ~rm.column(p) & rm.column(q)
    if not pattern.any():
        raise PatternNotFoundError(
            "No word of RM(1, {}) has bits 01 at ({}, {}).".format(m, p, q)
        )
    x = rm.words[np.nonzero(pattern)[0][0]]
    swap = bitops.unit_word(n, p) | bitops.unit_word(n, q)
    y = x ^ swap

    same = kerdock.column(p) == kerdock.column(q)
    even = kerdock.words[same]
    odd = Code(kerdock.words[~same], n=n, canonical=True)
    translate_holds = odd == Code(even ^ x[None, :], n=n)

    switched = Code(np.concatenate([even, even ^ y[None, :]]), n=n)
    bits = kerdock.bits()
    bits[:, [p, q]] = bits[:, [q, p]]
    transposed = Code.from_bits(bits)
    parameters = [
        (kerdock.n, kerdock.size, kerdock.min_distance),
        (switched.n, switched.size, switched.min_distance),
    ]
    return SwitchingResult(
        p, q, translate_holds, switched == transposed, parameters
    )


def min_weight_neighbor_check(code: Code, p: Optional[int] = None) -> PropertyVerdict:
    """ In the code punctured at ``p`` (default: last coordinate), every
    word of weight ``d`` is at distance ``d - 1`` from some word of weight
    ``d - 1``, with ``d`` the minimum distance of the unpunctured code. """
    if p is None:
        p = code.n - 1
    d = code.min_distance
    punctured = puncture(code, p)
    heavy = punctured.words[punctured.weights() == d]
    light = punctured.words[punctured.weights() == d - 1]
    covered = np.zeros(len(heavy), dtype=bool)
    if len(light):
        for offset, block in bitops.iter_distance_blocks(heavy, light):
            covered[offset : offset + len(block)] = (block == d - 1).any(axis=1)
    return PropertyVerdict(
        "min-weight-neighbors",
        bool(covered.all()) and len(light) > 0,
        EXHAUSTIVE,
        len(heavy),
        uncovered=int((~covered).sum()),
        light_words=len(light),
    )
