#!/usr/bin/env python3

# std
import unittest

# 3rd party
import numpy as np

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.analysis.components import (
    GRAPH,
    SPAN,
    ComponentAnalyzer,
    DisjointSet,
    bfs_component_count,
    csgraph_component_count,
    i_components,
    linear_span_components,
    min_weight_neighbor_check,
    min_weight_span_rank,
    parity_classification_check,
    parity_classification_sweep,
    switching_check,
)
from kerdocklab.codes.code import Code
from kerdocklab.codes.families import (
    build_bch_c13,
    build_kerdock,
    build_rm1,
    build_trace_dual,
)
from kerdocklab.codes.operators import puncture
from kerdocklab.errors import EmptyFlipSetError


class TestDisjointSet(MyTestCase):
    def test_union(self):
        forest = DisjointSet(6)
        self.assertTrue(forest.union(0, 1))
        self.assertTrue(forest.union(2, 1))
        self.assertFalse(forest.union(0, 2))
        self.assertEqual(forest.find(2), forest.find(0))
        self.assertEqual(forest.count, 4)
        self.assertEqual(forest.component_sizes(), [3, 1, 1, 1])

    def test_union_edges(self):
        forest = DisjointSet(8)
        forest.union_edges(np.array([7, 6, 5, 1]), np.array([6, 5, 4, 0]))
        self.assertEqual(forest.count, 4)
        self.assertEqual(forest.component_sizes(), [4, 2, 1, 1])
        roots = forest.roots()
        self.assertEqual(len(set(roots[4:])), 1)
        self.assertEqual(roots[0], roots[1])

    def test_agrees_with_single_unions(self):
        rng = np.random.default_rng(5)
        a = rng.integers(0, 200, size=150)
        b = rng.integers(0, 200, size=150)
        batched = DisjointSet(200)
        batched.union_edges(a, b)
        single = DisjointSet(200)
        for x, y in zip(a, b):
            single.union(int(x), int(y))
        self.assertEqual(batched.component_sizes(), single.component_sizes())


class TestGraphComponents(MyTestCase):
    @classmethod
    def setUpClass(cls):
        cls.k = build_kerdock(4)
        cls.punctured = puncture(cls.k, 15)

    def test_punctured_kerdock(self):
        report = i_components(self.punctured, 0)
        self.assertEqual(report.d_used, 5)
        self.assertEqual(report.component_count, 2)
        self.assertEqual(report.component_sizes, [128, 128])
        self.assertEqual(bfs_component_count(self.punctured, 0), 2)
        self.assertEqual(csgraph_component_count(self.punctured, 0), 2)

    def test_kerdock(self):
        self.assertEqual(i_components(self.k, 3).component_count, 1)

    def test_small(self):
        code = Code.from_strings(["0000", "1100", "1010", "0111"])
        for i in range(4):
            with self.subTest(i=i):
                self.assertEqual(
                    i_components(code, i).component_count,
                    bfs_component_count(code, i),
                )
        with self.assertRaises(IndexError):
            i_components(code, 4)

    def test_parity_classification(self):
        self.assertTrue(parity_classification_check(self.k, 15, 0))
        reports = parity_classification_sweep(self.k, 0, [1, 7])
        self.assertEqual([r.coordinate for r in reports], [1, 7])
        self.assertTrue(all(r.classification_verdict for r in reports))


class TestSpanComponents(MyTestCase):
    @classmethod
    def setUpClass(cls):
        cls.dual = build_trace_dual(5)

    def test_bch_dual(self):
        report = linear_span_components(self.dual, 0)
        self.assertEqual(report.rank, 10)
        self.assertEqual(report.dimension, 10)
        self.assertEqual(report.component_count, 1)
        self.assertFalse(report.assumed_distance)
        self.assertEqual(i_components(self.dual, 0).component_count, 1)

    def test_rm1(self):
        rm = build_rm1(4)
        for i in (0, 5):
            with self.subTest(i=i):
                self.assertEqual(
                    linear_span_components(rm, i).component_count,
                    i_components(rm, i).component_count,
                )

    def test_parity_check_code(self):
        report = linear_span_components(build_bch_c13(6), 0)
        self.assertTrue(report.assumed_distance)
        self.assertEqual(report.d_used, 5)
        self.assertEqual(report.rank, 50)
        self.assertEqual(report.component_count, 2)

    def test_empty_flip_set(self):
        code = Code.from_strings(["0000", "1100"], linear=True)
        with self.assertRaises(EmptyFlipSetError):
            linear_span_components(code, 3)

    def test_nonlinear(self):
        with self.assertRaises(ValueError):
            linear_span_components(build_kerdock(4), 0)

    def test_min_weight_words(self):
        self.assertEqual(min_weight_span_rank(self.dual), 10)
        verdict = min_weight_neighbor_check(self.dual)
        self.assertTrue(verdict)
        self.assertEqual(verdict.details["uncovered"], 0)


class TestComponentAnalyzer(MyTestCase):
    def test_sweep(self):
        analyzer = ComponentAnalyzer()
        analyzer.set_coordinates([0, 2])
        sweep = analyzer.run(build_trace_dual(5))
        self.assertEqual(sweep.counts, [1, 1])
        self.assertEqual(list(sweep.df.index), [0, 2])
        analyzer.set_method(SPAN)
        self.assertEqual(analyzer.run(build_trace_dual(5)).counts, [1, 1])
        self.assertEqual(analyzer.md["method"], SPAN)

    def test_invalid(self):
        analyzer = ComponentAnalyzer()
        with self.assertRaises(ValueError):
            analyzer.set_method("magic")
        analyzer.set_method(GRAPH)
        with self.assertRaises(ValueError):
            analyzer.run(build_bch_c13(6))


class TestSwitching(MyTestCase):
    @classmethod
    def setUpClass(cls):
        cls.k = build_kerdock(4)

    def test_switching(self):
        result = switching_check(self.k, 14, 15)
        self.assertTrue(result)
        self.assertTrue(result.translate_holds)
        self.assertEqual(result.parameters, [(16, 256, 6), (16, 256, 6)])
        self.assertTrue(switching_check(self.k, 2, 9).holds)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            switching_check(self.k, 3, 3)
        with self.assertRaises(IndexError):
            switching_check(self.k, 0, 16)


if __name__ == "__main__":
    unittest.main()
