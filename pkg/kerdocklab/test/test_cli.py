#!/usr/bin/env python3

# std
import contextlib
import io
import json
from pathlib import Path
import tempfile
import unittest

# ours
from kerdocklab.util.testing import MyTestCase
from kerdocklab.cli import main
from kerdocklab.codes.storage import read_code


class TestCli(MyTestCase):
    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()
        self.tmp_path = Path(self.tmp_dir.name)

    def tearDown(self):
        self.tmp_dir.cleanup()

    def run_cli(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            status = main([str(a) for a in argv])
        return status, out.getvalue(), err.getvalue()

    def build_k4(self):
        path = self.tmp_path / "k4.kcode"
        status, _, _ = self.run_cli(
            "build", "--family", "kerdock", "--m", 4, "--out", path
        )
        self.assertEqual(status, 0)
        return path

    def test_build_and_weights(self):
        path = self.build_k4()
        status, out, _ = self.run_cli("analyze", "weights", "--in", path)
        self.assertEqual(status, 0)
        self.assertEqual(
            json.loads(out), {"0": 1, "6": 112, "8": 30, "10": 112, "16": 1}
        )

    def test_overwrite(self):
        path = self.build_k4()
        status, _, err = self.run_cli(
            "build", "--family", "kerdock", "--m", 4, "--out", path
        )
        self.assertEqual(status, 2)
        self.assertIn("already exist", err)
        status, _, _ = self.run_cli(
            "build", "--family", "kerdock", "--m", 4, "--out", path, "--overwrite"
        )
        self.assertEqual(status, 0)

    def test_distances_and_kernel(self):
        path = self.build_k4()
        status, out, _ = self.run_cli("analyze", "distances", "--in", path)
        self.assertEqual(json.loads(out), [0, 6, 8, 10, 16])
        status, out, _ = self.run_cli("analyze", "kernel", "--in", path)
        self.assertEqual(status, 0)
        self.assertIn("dimension", json.loads(out))

    def test_punctured_components(self):
        path = self.build_k4()
        punctured = self.tmp_path / "k4p.kcode"
        status, _, _ = self.run_cli(
            "derive", "puncture", "--in", path, "--coordinate", 15, "--out", punctured
        )
        self.assertEqual(status, 0)
        status, out, _ = self.run_cli(
            "components", "--in", punctured, "--all", "--method", "graph"
        )
        self.assertEqual(status, 0)
        counts = [c["component_count"] for c in json.loads(out)["components"]]
        self.assertEqual(counts, [2] * 15)

    def test_span_needs_linear_code(self):
        path = self.build_k4()
        status, _, err = self.run_cli(
            "components", "--in", path, "--coordinate", 0, "--method", "span"
        )
        self.assertEqual(status, 2)
        self.assertIn("not linear", err)

    def test_linear_distances(self):
        path = self.tmp_path / "dual.kcode"
        self.run_cli("build", "--family", "bch13-dual", "--m", 5, "--out", path)
        status, out, _ = self.run_cli("analyze", "distances", "--in", path)
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out), [0, 12, 16, 20])
        self.assertTrue(read_code(path).linear)

    def test_span(self):
        path = self.tmp_path / "dual.kcode"
        self.run_cli("build", "--family", "bch13-dual", "--m", 5, "--out", path)
        status, out, _ = self.run_cli(
            "components", "--in", path, "--coordinate", 3, "--method", "span"
        )
        self.assertEqual(status, 0)
        report = json.loads(out)["components"][0]
        self.assertEqual(report["rank"], 10)
        self.assertEqual(report["component_count"], 1)

    def test_design(self):
        path = self.build_k4()
        status, out, _ = self.run_cli(
            "design", "--in", path, "--weight", 6, "--max-t", 3
        )
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)["lambdas"], [42, 14, 4])

    def test_scheme(self):
        path = self.tmp_path / "two.kcode"
        k4 = self.build_k4()
        for i in (15, 14):
            self.run_cli(
                "derive", "shorten", "--in", k4, "--coordinate", i,
                "--out", path, "--overwrite",
            )
            k4 = path
        status, out, _ = self.run_cli("scheme", "--in", path)
        self.assertEqual(status, 0)
        tensor = json.loads(out)
        self.assertTrue(tensor["consistent"])
        self.assertEqual(tensor["relations"], [0, 6, 8, 10])

    def test_usage_errors(self):
        status, _, _ = self.run_cli("build", "--family", "hamming", "--m", 4, "--out", "x")
        self.assertEqual(status, 2)
        status, _, _ = self.run_cli("analyze", "weights")
        self.assertEqual(status, 2)
        status, _, err = self.run_cli(
            "build", "--family", "kerdock", "--m", 5, "--out", self.tmp_path / "k5"
        )
        self.assertEqual(status, 2)
        self.assertIn("kerdocklab: error", err)

    def test_missing_coordinate(self):
        path = self.build_k4()
        status, _, _ = self.run_cli(
            "derive", "puncture", "--in", path, "--out", self.tmp_path / "p"
        )
        self.assertEqual(status, 2)

    def test_parity_check_code_not_written(self):
        status, _, _ = self.run_cli(
            "build", "--family", "bch13", "--m", 6, "--out", self.tmp_path / "b"
        )
        self.assertEqual(status, 2)


if __name__ == "__main__":
    unittest.main()
