#!/usr/bin/env python3

# std
import unittest

# 3rd party
import numpy as np

# ours
import kerdocklab.util.metadata as metadata


class TestNestedDict(unittest.TestCase):
    def test_nested_dict(self):
        nd = metadata.nested_dict()
        nd[1][2][3] = None
        self.assertEqual(nd, {1: {2: {3: None}}})


class TestMetaData(unittest.TestCase):
    def test_git_info(self):
        gi = metadata.get_git_info()
        self.assertEqual(set(gi), {"branch", "sha", "msg", "time"})

    def test_version_info(self):
        self.assertEqual(
            metadata.version_info()["version"], metadata.get_version()
        )

    def test_serialize_identical(self):
        cases = [
            "test",
            3,
            3.123,
            True,
            None,
            [1, 2, 3],
            [[1, 2, 3], [4, 5], "xyz"],
        ]
        for case in cases:
            self.assertEqual(metadata.failsafe_serialize(case), case)
        self.assertEqual(metadata.failsafe_serialize(cases), cases)

    def test_serialize_converted(self):
        self.assertEqual(metadata.failsafe_serialize({1: 2}), {"1": 2})
        self.assertEqual(metadata.failsafe_serialize((1, 2)), [1, 2])
        self.assertEqual(
            metadata.failsafe_serialize(np.array([1, 2], dtype=np.int64)),
            [1, 2],
        )
        self.assertEqual(metadata.failsafe_serialize(np.int64(3)), 3)
        self.assertEqual(metadata.failsafe_serialize({2, 1}), [1, 2])


class TestGetVersion(unittest.TestCase):
    def test_get_version(self):
        version = metadata.get_version()
        # Version has form int.int[.int]
        ints = version.split(".")
        self.assertGreaterEqual(len(ints), 2)
        self.assertLessEqual(len(ints), 3)
        for i in ints:
            self.assertTrue(i.isnumeric())


if __name__ == "__main__":
    unittest.main()
