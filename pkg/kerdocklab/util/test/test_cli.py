#!/usr/bin/env python3

# std
import logging
from pathlib import Path
import tempfile
import unittest

# ours
from kerdocklab.util.cli import handle_overwrite


class TestHandleOverwrite(unittest.TestCase):
    def setUp(self):
        self.log = logging.getLogger("test_handle_overwrite")
        self.tmpdir = tempfile.TemporaryDirectory()
        self.existing = Path(self.tmpdir.name) / "existing.kcode"
        self.existing.write_bytes(b"")
        self.missing = Path(self.tmpdir.name) / "missing.kcode"

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_nothing_exists(self):
        self.assertFalse(handle_overwrite([self.missing], "raise", self.log))

    def test_overwrite(self):
        self.assertTrue(
            handle_overwrite([self.missing, self.existing], "overwrite", self.log)
        )

    def test_raise(self):
        with self.assertRaises(FileExistsError):
            handle_overwrite([self.existing], "raise", self.log)

    def test_unknown_behavior(self):
        with self.assertRaises(ValueError):
            handle_overwrite([self.missing], "ask", self.log)


if __name__ == "__main__":
    unittest.main()
